#include "classcoupler/mixed_state.h"

#include <algorithm>
#include <ostream>

namespace classcoupler {

auto other_class(Class_id c) -> Class_id { return c == Class_id::one ? Class_id::two : Class_id::one; }

auto Mixed_state::has_atom_tag() const -> bool {
  return std::ranges::any_of(locations, [](const Coord& c) { return c.is_atom(); });
}

auto operator<<(std::ostream& os, const Mixed_state& state) -> std::ostream& {
  os << '(';
  auto first = true;
  for (const auto& c : state.locations) {
    os << (first ? "" : ", ");
    if (c.is_atom()) {
      os << "atom";
    } else {
      os << c.value_or(0.0);
    }
    first = false;
  }
  for (auto v : state.variances) {
    os << (first ? "" : ", ") << "v=" << v;
    first = false;
  }
  return os << ')';
}

}  // namespace classcoupler
