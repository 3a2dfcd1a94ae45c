#pragma once

#include "wg/rational.hpp"
#include "wg/symcore.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace wg {

enum class GraphKind { Unitary, Orthogonal, AIII };

std::string_view to_string(GraphKind kind);
/// "u", "o", "aiii" (case-insensitive, long names accepted).
GraphKind parse_graph_kind(std::string_view text);

/// A vertex: a permutation (unitary, A III) or a pair partition (orthogonal).
struct GraphNode {
    std::variant<Permutation, PairPartition> element;

    GraphNode() = default;
    GraphNode(Permutation p) : element(std::move(p)) {}      // NOLINT(google-explicit-constructor)
    GraphNode(PairPartition m) : element(std::move(m)) {}    // NOLINT(google-explicit-constructor)

    int level() const;
    bool is_empty() const { return level() == 0; }
    const Permutation& permutation() const;
    const PairPartition& pairing() const;
    bool holds_permutation() const { return std::holds_alternative<Permutation>(element); }
    std::string to_string() const;
    /// |element|: k minus the number of cycles (coset cycles for pairings).
    int length() const;
    /// Cycle-type or coset-type.
    IntegerPartition class_key() const;

    bool operator==(const GraphNode&) const = default;
};

enum class EdgeKind { Solid, Dashed, Squiggled };

struct EdgeStep {
    EdgeKind kind = EdgeKind::Solid;
    /// Transposition index i for solid edges, 0 otherwise.
    int index = 0;
    GraphNode target;
};

/// Solid steps out of node: (i,k)sigma for i < k, or (i,2k-1).m for i < 2k-1.
/// Orthogonal self-loops are kept; every index is its own edge.
std::vector<EdgeStep> solid_neighbors(GraphKind kind, const GraphNode& node);
std::optional<GraphNode> dashed_target(GraphKind kind, const GraphNode& node);
/// Only defined for the A III graph; throws DomainError for other kinds.
std::optional<GraphNode> squiggled_target(GraphKind kind, const GraphNode& node);

/// Solid indices i < j of an orthogonal vertex that reach the same non-loop target.
std::vector<std::pair<int, int>> duplicate_solid_targets(const PairPartition& m);

/// Memoized big-integer path counts. Thread-safe: concurrent readers, one writer per insert.
class PathCountTable {
public:
    PathCountTable();
    ~PathCountTable();
    PathCountTable(const PathCountTable&) = delete;
    PathCountTable& operator=(const PathCountTable&) = delete;

    /// #P(node, l): paths node -> empty set with exactly l solid edges.
    BigInt count(GraphKind kind, const GraphNode& node, int l);
    /// A III paths from sigma with exactly `solid` solid and `dashed` dashed edges.
    BigInt count_refined(const Permutation& sigma, int solid, int dashed);

    std::size_t size() const;
    void clear();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Process-wide table used by the free functions below.
PathCountTable& shared_path_counts();

BigInt count_paths(GraphKind kind, const GraphNode& node, int l);

/// A III counts for every (solid, dashed) split with at most max_solid solid edges.
/// Keys are (l0, l1); the squiggled count is (k - l1) / 2.
std::map<std::pair<int, int>, BigInt> refined_counts(const Permutation& sigma, int max_solid);

struct Path {
    GraphNode start;
    std::vector<EdgeStep> steps;

    int solid_count() const;
    int dashed_count() const;
    int squiggled_count() const;
    /// Vertex sequence including start and the final empty element.
    std::vector<GraphNode> vertices() const;
};

struct PathEnumeration {
    std::vector<Path> paths;
    /// True when the cap stopped enumeration early; paths then holds the first `limit` paths.
    bool truncated = false;
};

/// All paths in P(node, l), ordered lexicographically by edge choices
/// (solid before dashed before squiggled, then by index).
PathEnumeration enumerate_paths(GraphKind kind, const GraphNode& node, int l,
                                std::optional<std::size_t> limit = std::nullopt);

/// Arrow notation: "4,1,5,3,2 -(3,5)-> 4,1,3,5,2 => ... => ∅".
std::string format_path(GraphKind kind, const Path& path);

struct Transposition {
    int s = 0;
    int t = 0;
    bool operator==(const Transposition&) const = default;
};

/// sigma = tau_1 ... tau_l (unitary) or m = (tau_1 ... tau_l).e_k (orthogonal),
/// with weakly decreasing larger entries.
struct MonotoneFactorization {
    std::vector<Transposition> transpositions;
    GraphNode target;

    std::string to_string() const;
};

MonotoneFactorization path_to_factorization(GraphKind kind, const Path& path);
Path factorization_to_path(const MonotoneFactorization& f, GraphKind kind);

} // namespace wg
