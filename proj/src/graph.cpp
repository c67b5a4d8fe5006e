#include "tropvis/graph.hpp"

#include <algorithm>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/strong_components.hpp>

namespace tropvis {

SccPartition strongly_connected_components(std::size_t n, const std::vector<Edge>& edges) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS>;
  Graph g(n);
  for (const auto& [i, j] : edges) boost::add_edge(i, j, g);
  std::vector<int> raw(n);
  boost::strong_components(g, boost::make_iterator_property_map(raw.begin(),
                                                                boost::get(boost::vertex_index, g)));

  // Renumber by least member so the partition does not depend on Boost's order.
  SccPartition out;
  out.component_of.assign(n, 0);
  std::map<int, std::size_t> renumber;
  for (std::size_t v = 0; v < n; ++v) {
    auto [it, inserted] = renumber.try_emplace(raw[v], out.components.size());
    if (inserted) out.components.emplace_back();
    out.components[it->second].push_back(v);
    out.component_of[v] = it->second;
  }
  return out;
}

}  // namespace tropvis
