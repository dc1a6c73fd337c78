#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "minksym/star2d.hpp"
#include "minksym/support_nd.hpp"

// Line-oriented shape files:
//   dim=2            dim=<n>
//   type=radial      type=support
//   m=<int>          cloud=grid:<m> | cloud=fib:<M> | cloud=mc:<M>
//   <r[0]>           <h[0]>
//   ...              ...
// Values carry 17 significant digits so a round trip is exact.

namespace minksym {

using Shape = std::variant<StarBody2D, SupportBody>;

void write_shape(std::ostream& os, const StarBody2D& K);
void write_shape(std::ostream& os, const SupportBody& H);
Shape read_shape(std::istream& is);

void save_shape(const std::string& path, const Shape& s);
Shape load_shape(const std::string& path);

}  // namespace minksym
