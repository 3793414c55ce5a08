#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace reid {

using ElemId = std::uint32_t;

/// Fixed-universe bitset of element ids.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElemSet from_ids(std::size_t universe, std::span<const ElemId> ids) {
    ElemSet s(universe);
    for (ElemId i : ids) s.insert(i);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }
  bool contains(ElemId i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void insert(ElemId i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<ElemId>(wi * 64 + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  std::vector<ElemId> ids() const {
    std::vector<ElemId> out;
    out.reserve(count());
    for_each([&](ElemId i) { out.push_back(i); });
    return out;
  }

  ElemSet& operator&=(const ElemSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElemSet& operator|=(const ElemSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  bool is_subset_of(const ElemSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  friend bool operator==(const ElemSet&, const ElemSet&) = default;

  std::size_t hash() const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElemSetHash {
  std::size_t operator()(const ElemSet& s) const noexcept { return s.hash(); }
};

}  // namespace reid
