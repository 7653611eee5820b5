#include "biblio/collab_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

#include "biblio/alternative_indices.hpp"
#include "biblio/classic_indices.hpp"
#include "biblio/errors.hpp"

namespace biblio {

std::optional<std::size_t> CoauthorGraph::index_of(std::string_view author_id) const {
    auto it = std::lower_bound(node_ids.begin(), node_ids.end(), author_id);
    if (it == node_ids.end() || *it != author_id) return std::nullopt;
    return static_cast<std::size_t>(it - node_ids.begin());
}

long long CoauthorGraph::weight(std::size_t a, std::size_t b) const {
    auto it = adjacency[a].find(b);
    return it == adjacency[a].end() ? 0 : it->second;
}

CoauthorGraph build_coauthor_graph(const Corpus& corpus) {
    CoauthorGraph graph;
    // authors() is sorted by id, so node ids stay sorted
    std::vector<std::size_t> author_of_node;
    for (std::size_t a = 0; a < corpus.authors().size(); ++a) {
        if (!corpus.publication_indices_of_author(a).empty()) {
            graph.node_ids.push_back(corpus.authors()[a].id);
            author_of_node.push_back(a);
        }
    }
    graph.adjacency.resize(graph.node_ids.size());
    graph.degree.assign(graph.node_ids.size(), 0);

    for (const Publication& pub : corpus.publications()) {
        std::vector<std::size_t> nodes;
        nodes.reserve(pub.author_ids.size());
        for (const std::string& aid : pub.author_ids) {
            if (auto node = graph.index_of(aid)) nodes.push_back(*node);
        }
        std::sort(nodes.begin(), nodes.end());
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                ++graph.adjacency[nodes[i]][nodes[j]];
                ++graph.adjacency[nodes[j]][nodes[i]];
            }
        }
    }
    for (std::size_t i = 0; i < graph.adjacency.size(); ++i) {
        for (const auto& [neighbor, weight] : graph.adjacency[i]) {
            graph.degree[i] += weight;
            if (i < neighbor) graph.total_weight += weight;
        }
    }
    return graph;
}

std::string edge_list_text(const CoauthorGraph& graph) {
    std::string text;
    for (std::size_t i = 0; i < graph.adjacency.size(); ++i) {
        for (const auto& [neighbor, weight] : graph.adjacency[i]) {
            if (neighbor <= i) continue;
            text += graph.node_ids[i];
            text += '\t';
            text += graph.node_ids[neighbor];
            text += '\t';
            text += std::to_string(weight);
            text += '\n';
        }
    }
    return text;
}

double modularity(const CoauthorGraph& graph, std::span<const int> labels) {
    if (labels.size() != graph.node_count())
        throw DomainError(Errc::unlabeled_node, "partition labels " + std::to_string(labels.size()) +
                                                    " nodes, graph has " +
                                                    std::to_string(graph.node_count()));
    if (graph.total_weight == 0)
        throw DomainError(Errc::undefined_modularity, "graph has no edges");

    int max_label = -1;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 0)
            throw DomainError(Errc::unlabeled_node,
                              "node " + graph.node_ids[i] + " is unlabeled");
        max_label = std::max(max_label, labels[i]);
    }

    std::vector<long long> internal_weight(static_cast<std::size_t>(max_label) + 1, 0);
    std::vector<long long> community_degree(static_cast<std::size_t>(max_label) + 1, 0);
    for (std::size_t i = 0; i < graph.node_count(); ++i) {
        community_degree[labels[i]] += graph.degree[i];
        for (const auto& [neighbor, weight] : graph.adjacency[i]) {
            if (neighbor > i && labels[neighbor] == labels[i])
                internal_weight[labels[i]] += weight;
        }
    }

    const double m = static_cast<double>(graph.total_weight);
    double q = 0.0;
    for (std::size_t c = 0; c < internal_weight.size(); ++c) {
        const double within = static_cast<double>(internal_weight[c]) / m;
        const double half_degree = static_cast<double>(community_degree[c]) / (2.0 * m);
        q += within - half_degree * half_degree;
    }
    return q;
}

double modularity(const CoauthorGraph& graph, const Partition& partition) {
    return modularity(graph, std::span<const int>(partition.labels));
}

namespace {

// Relabels communities as contiguous integers from 0, ordered by each
// community's smallest node index.
Partition finalize_partition(const CoauthorGraph& graph, const std::vector<int>& raw_labels) {
    Partition partition;
    partition.labels.assign(raw_labels.size(), -1);
    std::vector<int> mapping(raw_labels.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < raw_labels.size(); ++i) {
        int& mapped = mapping[raw_labels[i]];
        if (mapped < 0) mapped = next++;
        partition.labels[i] = mapped;
    }
    partition.community_count = next;
    partition.modularity_q = modularity(graph, std::span<const int>(partition.labels));
    return partition;
}

}  // namespace

Partition detect_communities(const CoauthorGraph& graph) {
    if (graph.node_count() == 0 || graph.total_weight == 0)
        throw DomainError(Errc::undefined_modularity,
                          "coauthorship graph has no edges; communities are undefined");

    const double m = static_cast<double>(graph.total_weight);
    std::vector<int> labels(graph.node_count());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i);

    std::vector<int> best_labels = labels;
    double best_q = modularity(graph, std::span<const int>(labels));

    while (true) {
        // community aggregates for the current labeling
        std::vector<long long> community_degree(labels.size(), 0);
        std::map<std::pair<int, int>, long long> between;
        for (std::size_t i = 0; i < graph.node_count(); ++i) {
            community_degree[labels[i]] += graph.degree[i];
            for (const auto& [neighbor, weight] : graph.adjacency[i]) {
                if (neighbor <= i) continue;
                int a = labels[i], b = labels[neighbor];
                if (a == b) continue;
                between[{std::min(a, b), std::max(a, b)}] += weight;
            }
        }

        // best merge: largest dQ, ties to the smallest (label_a, label_b);
        // map order makes the first strict maximum exactly that pair
        double best_dq = 0.0;
        std::pair<int, int> best_pair{-1, -1};
        for (const auto& [pair, weight] : between) {
            const double dq = static_cast<double>(weight) / m -
                              static_cast<double>(community_degree[pair.first]) *
                                  static_cast<double>(community_degree[pair.second]) /
                                  (2.0 * m * m);
            if (dq > best_dq) {
                best_dq = dq;
                best_pair = pair;
            }
        }
        if (best_pair.first < 0) break;  // no merge with dQ > 0

        for (int& label : labels) {
            if (label == best_pair.second) label = best_pair.first;
        }
        double q = modularity(graph, std::span<const int>(labels));
        if (q > best_q) {
            best_q = q;
            best_labels = labels;
        }
    }

    return finalize_partition(graph, best_labels);
}

std::vector<Recommendation> recommend_pairs(const Corpus& corpus, const CoauthorGraph& graph,
                                            const Partition& partition, int tolerance,
                                            std::size_t limit) {
    if (tolerance < 0) throw DomainError(Errc::invalid_inputs, "negative tolerance");
    if (limit < 1) throw DomainError(Errc::invalid_inputs, "limit must be at least 1");
    if (partition.labels.size() != graph.node_count())
        throw DomainError(Errc::unlabeled_node, "partition does not match graph");

    std::vector<int> h_of_node(graph.node_count());
    for (std::size_t i = 0; i < graph.node_count(); ++i)
        h_of_node[i] = h_index(corpus, graph.node_ids[i]);

    auto shared_neighbors = [&](std::size_t a, std::size_t b) {
        long long shared = 0;
        for (const auto& [neighbor, weight] : graph.adjacency[a]) {
            (void)weight;
            if (neighbor != b && graph.adjacency[b].contains(neighbor)) ++shared;
        }
        return shared;
    };

    std::vector<Recommendation> recommendations;
    for (std::size_t senior = 0; senior < graph.node_count(); ++senior) {
        // below h 10 the scaled target rounds to 0 and the band is noise
        if (h_of_node[senior] < 10) continue;
        const int target = collaboration_target_h(h_of_node[senior]);
        for (std::size_t junior = 0; junior < graph.node_count(); ++junior) {
            if (junior == senior) continue;
            if (partition.labels[junior] == partition.labels[senior]) continue;
            if (h_of_node[junior] > h_of_node[senior]) continue;
            if (std::abs(h_of_node[junior] - target) > tolerance) continue;
            if (graph.weight(senior, junior) > 0) continue;  // already coauthors

            Recommendation rec;
            rec.senior_id = graph.node_ids[senior];
            rec.junior_id = graph.node_ids[junior];
            rec.senior_h = h_of_node[senior];
            rec.junior_h = h_of_node[junior];
            rec.senior_community = partition.labels[senior];
            rec.junior_community = partition.labels[junior];
            rec.target_h = target;
            rec.shared_coauthors = shared_neighbors(senior, junior);
            rec.score = std::abs(h_of_node[junior] - target);
            recommendations.push_back(std::move(rec));
        }
    }

    std::sort(recommendations.begin(), recommendations.end(),
              [](const Recommendation& a, const Recommendation& b) {
                  return std::tie(a.score, a.shared_coauthors, a.senior_id, a.junior_id) <
                         std::tie(b.score, b.shared_coauthors, b.senior_id, b.junior_id);
              });
    if (recommendations.size() > limit) recommendations.resize(limit);
    return recommendations;
}

}  // namespace biblio
