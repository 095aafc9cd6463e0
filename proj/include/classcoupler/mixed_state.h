#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>

#include <boost/container/static_vector.hpp>

namespace classcoupler {

// Partition cell of the state space. Only two classes ship; the numbering
// leaves room for more.
enum class Class_id : std::uint8_t {
  one = 1,  // states with an atom tag (the null set)
  two = 2,  // everything else
};

auto other_class(Class_id c) -> Class_id;

// A location parameter that either sits exactly on the model's atom or is free.
// Atom coordinates carry no value; equality is exact and tag-aware.
class Coord {
 public:
  static constexpr auto at_atom() -> Coord { return Coord{true, 0.0}; }
  static constexpr auto free(double value) -> Coord { return Coord{false, value}; }

  constexpr auto is_atom() const -> bool { return atom_; }
  // The coordinate's value, with `atom_value` substituted for an atom tag.
  constexpr auto value_or(double atom_value) const -> double { return atom_ ? atom_value : value_; }

  auto operator==(const Coord&) const -> bool = default;

 private:
  constexpr Coord(bool atom, double value) : atom_{atom}, value_{value} {}

  bool atom_;
  double value_;
};

inline constexpr std::size_t k_max_location_coords = 2;
inline constexpr std::size_t k_max_variance_coords = 2;

// Point of a mixed discrete-continuous state space: atom-taggable location
// coordinates plus strictly positive variance coordinates. The meaning of each
// slot is fixed by the model that produced the state.
struct Mixed_state {
  boost::container::static_vector<Coord, k_max_location_coords> locations;
  boost::container::static_vector<double, k_max_variance_coords> variances;

  auto has_atom_tag() const -> bool;

  auto operator==(const Mixed_state&) const -> bool = default;
};

auto operator<<(std::ostream& os, const Mixed_state& state) -> std::ostream&;

}  // namespace classcoupler
