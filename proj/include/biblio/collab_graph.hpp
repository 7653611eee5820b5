#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "biblio/corpus.hpp"

namespace biblio {

// Weighted undirected coauthorship graph. One node per author with at
// least one publication; edge weight counts joint publications. No
// self-edges. node_ids are sorted, so node indices are stable for a given
// corpus.
struct CoauthorGraph {
    std::vector<std::string> node_ids;
    // per node: neighbor index -> weight, symmetric
    std::vector<std::map<std::size_t, long long>> adjacency;
    std::vector<long long> degree;  // weighted degree k_i
    long long total_weight = 0;     // m, sum of edge weights

    std::size_t node_count() const { return node_ids.size(); }
    std::optional<std::size_t> index_of(std::string_view author_id) const;
    long long weight(std::size_t a, std::size_t b) const;
};

CoauthorGraph build_coauthor_graph(const Corpus& corpus);

// Edge list "id_a<TAB>id_b<TAB>weight", ids lexicographically ordered
// within a line, lines sorted. For inspection with external graph tools.
std::string edge_list_text(const CoauthorGraph& graph);

struct Partition {
    std::vector<int> labels;  // per node, contiguous from 0
    int community_count = 0;
    double modularity_q = 0.0;
};

// Modularity of a labeling: sum over communities of the
// within-community edge-weight fraction minus the squared half-degree
// fraction. Weighted throughout (degrees and m are weight sums). Throws
// undefined_modularity when m == 0 and unlabeled_node for a label < 0 or a
// label vector of the wrong length.
double modularity(const CoauthorGraph& graph, std::span<const int> labels);
double modularity(const CoauthorGraph& graph, const Partition& partition);

// Greedy agglomerative modularity maximization: start from singletons,
// repeatedly merge the community pair with the largest positive dQ, ties
// broken by the smallest (label_a, label_b) pair, and keep the best
// labeling seen. Deterministic. Throws undefined_modularity on an empty or
// edgeless graph.
Partition detect_communities(const CoauthorGraph& graph);

struct Recommendation {
    std::string senior_id;
    std::string junior_id;
    int senior_h = 0;
    int junior_h = 0;
    int senior_community = 0;
    int junior_community = 0;
    int target_h = 0;
    long long shared_coauthors = 0;  // common graph neighbors, used as tie-break
    double score = 0.0;              // |junior_h - target_h|, lower is better
};

// Cross-community collaboration candidates. Every author with h >= 10
// becomes a senior; partners are authors from other communities whose h
// falls inside the senior's pairing band (and does not exceed the senior's
// h). Pairs that already share a publication are excluded. Sorted by score,
// then fewer shared coauthors, then ids; truncated to `limit`.
std::vector<Recommendation> recommend_pairs(const Corpus& corpus, const CoauthorGraph& graph,
                                            const Partition& partition, int tolerance,
                                            std::size_t limit);

}  // namespace biblio
