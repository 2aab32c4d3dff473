#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gentuple/moves.hpp"
#include "gentuple/structure.hpp"

namespace gentuple {

enum class GraphMode { nielsen, ac };

// A fully materialized exploration target: the graph on generating
// (nielsen) or normally generating (ac) n-tuples of a finite group, with
// edges given by the elementary moves. In ac mode the conjugator set
// defaults to the whole group for small groups and to the distinguished
// generators otherwise (same component partition either way, since the
// conjugators generate).
struct GraphQuery {
  Group group;
  int n = 1;
  GraphMode mode = GraphMode::nielsen;
  std::optional<std::vector<GroupElement>> conjugators;
};

struct ExplorerOptions {
  std::uint64_t max_vertices = 10'000'000;  // clean budget_error past this
  int workers = 1;
  std::uint64_t full_conjugation_threshold = 64;  // |G| above which ac uses generators
};

struct ComponentsReport {
  std::uint64_t vertex_count = 0;
  std::uint64_t component_count = 0;
  // Lexicographically least tuple of each component, sorted; component ids
  // are positions in this list.
  std::vector<Tuple> representatives;
  // Tuple keys (mixed-radix over element indices), ascending.
  std::vector<std::uint64_t> vertex_keys;
  // Component id per vertex, parallel to vertex_keys.
  std::vector<std::uint32_t> component_of;
  std::string conjugator_note;  // which conjugator set an ac run actually used

  // Dense position of a tuple key, or npos if not a vertex.
  static constexpr std::uint64_t npos = UINT64_MAX;
  std::uint64_t vertex_position(std::uint64_t key) const;
};

std::uint64_t tuple_key(const GraphQuery& q, const Tuple& t);
Tuple tuple_from_key(const GraphQuery& q, std::uint64_t key);

ComponentsReport components(const GraphQuery& q, const ExplorerOptions& opts = {});

// Breadth-first path between two vertices of the same graph; nullopt when
// they lie in different components. The result replays by construction.
std::optional<Certificate> find_path(const GraphQuery& q, const Tuple& from, const Tuple& to,
                                     const ExplorerOptions& opts = {});

// Checks that the components of the ac graph on n-tuples are exactly the
// preimages of the components of the ac graph of the abelianization.
struct PreimageReport {
  bool holds = false;
  std::uint64_t group_vertices = 0;
  std::uint64_t group_components = 0;
  std::uint64_t ab_vertices = 0;
  std::uint64_t ab_components = 0;
  std::string detail;
};
PreimageReport verify_preimage_theorem(const Group& g, int n,
                                       const ExplorerOptions& opts = {});

enum class ExportFormat { dot, json };
std::string export_graph(const GraphQuery& q, ExportFormat format,
                         const ExplorerOptions& opts = {});

}  // namespace gentuple
