#include "dtknot/composition.hpp"

#include <stdexcept>

namespace dtknot {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  sums_.reserve(parts_.size());
  int running = 0;
  for (int l : parts_) {
    if (l < 0) throw std::invalid_argument("composition part must be non-negative");
    running += l;
    sums_.push_back(running);
  }
}

namespace {

void emit(int remaining, int slots, std::vector<int>& prefix,
          std::vector<Composition>& out) {
  if (slots == 1) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int l = 0; l <= remaining; ++l) {
    prefix.push_back(l);
    emit(remaining - l, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions(int k, int p) {
  if (k < 0) throw std::invalid_argument("composition total must be non-negative");
  if (p < 1) throw std::invalid_argument("composition needs at least one part");
  std::vector<Composition> out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(p));
  emit(k, p, prefix, out);
  return out;
}

long long phi(const Composition& l, int k) {
  if (l.total() != k) throw SumMismatchError("composition does not sum to the stated total");
  const int p = l.num_parts();
  long long value = 0;
  for (int i = 0; i + 1 < p; ++i) {
    const long long s = l.partial_sum(i);
    value += 2 * s * (s - 2 * k + 1);
    value += 2 * s * l.part(i + 1);
  }
  for (int i = 0; i < p; ++i) {
    const long long li = l.part(i);
    value += li * (li + 3) / 2;  // l(l+3) is even for every integer l
  }
  return value;
}

}  // namespace dtknot
