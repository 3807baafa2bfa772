#include "lendens/element.hpp"

#include "lendens/error.hpp"

namespace lendens {

namespace {

template <typename T>
const T& get_checked(const auto& variant, Element::Tag expected, Element::Tag actual) {
  if (expected != actual) {
    throw Error(ErrorCode::kTagMismatch,
                "expected " + tag_name(expected) + " element, got " + tag_name(actual));
  }
  return std::get<T>(variant);
}

}  // namespace

Element Element::natural(std::int64_t value) {
  Element e;
  e.value_ = value;
  return e;
}

Element Element::vector(IntVector value) {
  Element e;
  e.value_ = std::move(value);
  return e;
}

Element Element::rational(Rational value) {
  Element e;
  e.value_ = std::move(value);
  return e;
}

Element Element::tuple(std::vector<Element> parts) {
  Element e;
  e.value_ = std::move(parts);
  return e;
}

std::int64_t Element::as_natural() const {
  return get_checked<std::int64_t>(value_, Tag::kNatural, tag());
}

const IntVector& Element::as_vector() const {
  return get_checked<IntVector>(value_, Tag::kVector, tag());
}

const Rational& Element::as_rational() const {
  return get_checked<Rational>(value_, Tag::kRational, tag());
}

const std::vector<Element>& Element::parts() const {
  return get_checked<std::vector<Element>>(value_, Tag::kTuple, tag());
}

std::string Element::to_string() const {
  switch (tag()) {
    case Tag::kNatural: return std::to_string(as_natural());
    case Tag::kVector: return format_vector(as_vector());
    case Tag::kRational: return as_rational().to_string();
    case Tag::kTuple: {
      std::string out = "[";
      for (std::size_t i = 0; i < parts().size(); ++i) {
        if (i) out += ", ";
        out += parts()[i].to_string();
      }
      return out + "]";
    }
  }
  return {};
}

std::string tag_name(Element::Tag tag) {
  switch (tag) {
    case Element::Tag::kNatural: return "natural";
    case Element::Tag::kVector: return "vector";
    case Element::Tag::kRational: return "rational";
    case Element::Tag::kTuple: return "tuple";
  }
  return "unknown";
}

std::string format_vector(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace lendens
