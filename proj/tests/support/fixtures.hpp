#pragma once

#include <string>
#include <vector>

#include <gprod/cocycle_lab.hpp>

namespace gprod::fixtures {

SimplicialGraph graph(std::vector<std::string> names,
                      std::vector<std::pair<std::string, std::string>> edges = {});
SimplicialGraph path3();     // u–v–w
SimplicialGraph triangle();  // a, b, c
SimplicialGraph edgeless2(); // a, b

VertexGroup s3();  // table group: e, r, rr, s, sr, srr; generators s, sr

ProductAction free_zz(double p = 2);    // ℤ*ℤ, translation cocycles
ProductAction prod_zz(double p = 2);    // ℤ², translation cocycles
ProductAction dinf(double p = 2);       // ℤ/2 * ℤ/2, regular cocycles C=1
ProductAction p3(double p = 2);         // u:ℤ – v:ℤ/3 – w:ℤ, translation / regular C=1
ProductAction single_z(double p = 2);   // ℤ

struct Named {
  std::string name;
  ProductAction action;
};

/// FIX-FREE, FIX-PROD, FIX-D∞, FIX-P3.
std::vector<Named> all(double p);

/// (ℤ/2 * ℤ/2) × (ℤ/2 * ℤ/2) × ℤ as a graph product on K_{2,2,1}.
GraphProduct example_adim();
std::vector<std::uint64_t> example_adim_dims();

}  // namespace gprod::fixtures
