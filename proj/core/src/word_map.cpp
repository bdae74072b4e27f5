#include "wordmaps/word_map.hpp"

#include "wordmaps/error.hpp"

namespace wordmaps {

std::size_t table_length(const FiniteGroup& group, std::size_t arity, std::size_t cap) {
  std::size_t length = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (group.order() > 1 && length > cap / group.order()) {
      throw Error(Errc::TableCapExceeded, "|G|^d = " + std::to_string(group.order()) + "^" + std::to_string(arity) +
                                              " exceeds table cap " + std::to_string(cap));
    }
    length *= group.order();
  }
  if (length > cap) throw Error(Errc::TableCapExceeded, "table length exceeds cap " + std::to_string(cap));
  return length;
}

std::size_t encode_arguments(const FiniteGroup& group, std::span<const Element> args) {
  std::size_t index = 0;
  for (std::size_t i = args.size(); i-- > 0;) index = index * group.order() + args[i];
  return index;
}

std::vector<Element> decode_arguments(const FiniteGroup& group, std::size_t arity, std::size_t index) {
  std::vector<Element> args(arity);
  for (std::size_t i = 0; i < arity; ++i) {
    args[i] = static_cast<Element>(index % group.order());
    index /= group.order();
  }
  return args;
}

WordMapTable::WordMapTable(const FiniteGroup& group, std::size_t arity, std::vector<Element> values)
    : group_(&group), arity_(arity), values_(std::move(values)) {
  std::size_t expected = 1;
  for (std::size_t i = 0; i < arity; ++i) expected *= group.order();
  if (values_.size() != expected) {
    throw Error(Errc::InvalidArgument, "table has " + std::to_string(values_.size()) + " entries, expected " +
                                           std::to_string(expected));
  }
}

std::size_t WordMapTable::first_difference(const WordMapTable& other) const {
  if (other.values_.size() != values_.size()) throw Error(Errc::InvalidArgument, "tables of different shapes");
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != other.values_[i]) return i;
  return values_.size();
}

WordMapTable word_map_table(const Word& w, const FiniteGroup& group, std::size_t arity, std::size_t table_cap) {
  if (w.arity() > arity) {
    throw Error(Errc::InvalidArgument, "word arity " + std::to_string(w.arity()) + " exceeds table arity " +
                                           std::to_string(arity));
  }
  const std::size_t length = table_length(group, arity, table_cap);
  std::vector<Element> values(length);
  std::vector<Element> args(arity, 0);
  for (std::size_t i = 0; i < length; ++i) {
    values[i] = evaluate(w, group, args);
    // odometer, g_1 fastest
    for (std::size_t k = 0; k < arity; ++k) {
      if (++args[k] < group.order()) break;
      args[k] = 0;
    }
  }
  return WordMapTable(group, arity, std::move(values));
}

WordMapTable projection_table(const FiniteGroup& group, std::size_t arity, std::uint32_t var,
                              std::size_t table_cap) {
  if (var == 0 || var > arity) throw Error(Errc::VariableOutOfRange, "projection onto x" + std::to_string(var));
  return word_map_table(Word::generator(var, arity), group, arity, table_cap);
}

}  // namespace wordmaps
