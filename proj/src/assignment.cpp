#include "tropvis/assignment.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

namespace tropvis {

bool has_positive_permutation(std::size_t n, const std::vector<Edge>& support) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph g(2 * n);
  for (const auto& [i, j] : support) boost::add_edge(i, n + j, g);
  std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(2 * n);
  boost::edmonds_maximum_cardinality_matching(g, &mate[0]);
  return boost::matching_size(g, &mate[0]) == n;
}

}  // namespace tropvis
