#include "fixtures.hpp"

namespace gprod::fixtures {

SimplicialGraph graph(std::vector<std::string> names,
                      std::vector<std::pair<std::string, std::string>> edges) {
  return SimplicialGraph(std::move(names), edges);
}

SimplicialGraph path3() { return graph({"u", "v", "w"}, {{"u", "v"}, {"v", "w"}}); }
SimplicialGraph triangle() { return graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}); }
SimplicialGraph edgeless2() { return graph({"a", "b"}); }

VertexGroup s3() {
  // Elements s^i r^j, r^3 = s^2 = 1, r s = s r^-1.
  std::vector<std::string> names{"e", "r", "rr", "s", "sr", "srr"};
  auto index = [](int i, int j) { return i * 3 + ((j % 3) + 3) % 3; };
  std::vector<std::vector<std::string>> table(6, std::vector<std::string>(6));
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      int i1 = a / 3, j1 = a % 3, i2 = b / 3, j2 = b % 3;
      // s^i1 r^j1 s^i2 r^j2 = s^(i1+i2) r^((-1)^i2 j1 + j2)
      int j = (i2 == 1 ? -j1 : j1) + j2;
      table[a][b] = names[index((i1 + i2) % 2, j)];
    }
  }
  return VertexGroup::table(names, table, {"s", "sr"});
}

namespace {

ProductAction translation_product(SimplicialGraph g, double p) {
  std::vector<VertexGroup> groups(g.size(), VertexGroup::integers());
  std::vector<VertexCocycle> cocycles;
  for (const VertexGroup& grp : groups) cocycles.push_back(VertexCocycle::translation(grp, Exponent(p)));
  return ProductAction(GraphProduct(std::move(g), groups), std::move(cocycles));
}

}  // namespace

ProductAction free_zz(double p) { return translation_product(edgeless2(), p); }
ProductAction prod_zz(double p) { return translation_product(graph({"a", "b"}, {{"a", "b"}}), p); }
ProductAction single_z(double p) { return translation_product(graph({"a"}), p); }

ProductAction dinf(double p) {
  VertexGroup z2 = VertexGroup::cyclic(2);
  std::vector<VertexCocycle> cocycles(2, VertexCocycle::regular(z2, Exponent(p), 1));
  return ProductAction(GraphProduct(edgeless2(), {z2, z2}), std::move(cocycles));
}

ProductAction p3(double p) {
  VertexGroup z = VertexGroup::integers();
  VertexGroup z3 = VertexGroup::cyclic(3);
  Exponent e(p);
  std::vector<VertexCocycle> cocycles{VertexCocycle::translation(z, e),
                                      VertexCocycle::regular(z3, e, 1),
                                      VertexCocycle::translation(z, e)};
  return ProductAction(GraphProduct(path3(), {z, z3, z}), std::move(cocycles));
}

std::vector<Named> all(double p) {
  std::vector<Named> out;
  out.push_back({"FIX-FREE", free_zz(p)});
  out.push_back({"FIX-PROD", prod_zz(p)});
  out.push_back({"FIX-Dinf", dinf(p)});
  out.push_back({"FIX-P3", p3(p)});
  return out;
}

GraphProduct example_adim() {
  std::vector<std::string> names{"a1", "b1", "a2", "b2", "z"};
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      bool same_pair = (i == 0 && j == 1) || (i == 2 && j == 3);
      if (!same_pair) edges.emplace_back(names[i], names[j]);
    }
  }
  VertexGroup z2 = VertexGroup::cyclic(2);
  return GraphProduct(graph(names, edges), {z2, z2, z2, z2, VertexGroup::integers()});
}

std::vector<std::uint64_t> example_adim_dims() { return {0, 0, 0, 0, 1}; }

}  // namespace gprod::fixtures
