#include "frob/element.hpp"

#include <sstream>
#include <stdexcept>

namespace frob {

Element Element::vector_form(std::vector<std::int64_t> coords) {
  for (auto c : coords)
    if (c < 0) throw std::invalid_argument("element coordinates must be non-negative");
  Element e;
  e.repr_ = std::move(coords);
  return e;
}

Element Element::glued_form(std::int64_t n, Element hat1, Element hat2) {
  if (n < 0) throw std::invalid_argument("glued element count must be non-negative");
  Element e;
  e.repr_ = std::make_shared<const Glue>(Glue{n, std::move(hat1), std::move(hat2)});
  return e;
}

const std::vector<std::int64_t>& Element::coords() const {
  if (!is_vector()) throw std::logic_error("coords() on a glued element");
  return std::get<Coords>(repr_);
}

std::int64_t Element::glue_count() const {
  if (!is_glued()) throw std::logic_error("glue_count() on a vector element");
  return std::get<std::shared_ptr<const Glue>>(repr_)->n;
}

const Element& Element::hat1() const {
  return std::get<std::shared_ptr<const Glue>>(repr_)->hat1;
}

const Element& Element::hat2() const {
  return std::get<std::shared_ptr<const Glue>>(repr_)->hat2;
}

bool Element::is_zero() const {
  if (is_vector()) {
    for (auto c : coords())
      if (c != 0) return false;
    return true;
  }
  return glue_count() == 0 && hat1().is_zero() && hat2().is_zero();
}

int Element::compare(const Element& other) const {
  const bool v1 = is_vector(), v2 = other.is_vector();
  if (v1 != v2) return v1 ? -1 : 1;
  if (v1) {
    const auto& x = coords();
    const auto& y = other.coords();
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
    return 0;
  }
  if (glue_count() != other.glue_count())
    return glue_count() < other.glue_count() ? -1 : 1;
  if (int c = hat1().compare(other.hat1()); c != 0) return c;
  return hat2().compare(other.hat2());
}

std::size_t Element::hash() const {
  auto mix = [](std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  };
  if (is_vector()) {
    std::size_t h = 0x811c9dc5;
    for (auto c : coords()) h = mix(h, static_cast<std::size_t>(c));
    return h;
  }
  std::size_t h = 0x01000193;
  h = mix(h, static_cast<std::size_t>(glue_count()));
  h = mix(h, hat1().hash());
  h = mix(h, hat2().hash());
  return h;
}

std::string Element::to_string() const {
  std::ostringstream os;
  if (is_vector()) {
    os << "[";
    const auto& c = coords();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ",";
      os << c[i];
    }
    os << "]";
  } else {
    os << "{\"n\":" << glue_count() << ",\"hat1\":" << hat1().to_string()
       << ",\"hat2\":" << hat2().to_string() << "}";
  }
  return os.str();
}

}  // namespace frob
