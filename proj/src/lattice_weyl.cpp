#include "eqk/lattice_weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>
#include <utility>

#include "eqk/errors.hpp"

namespace eqk {

RootSubset RootSubset::parse(std::string_view text, std::size_t rank) {
  RootSubset out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ',' || std::isspace(static_cast<unsigned char>(text[pos])))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos) throw InputError("bad root index list: '" + std::string(text) + "'");
    const auto idx = std::stoul(std::string(text.substr(pos, end - pos)));
    if (idx < 1 || idx > rank) {
      throw InputError("root index " + std::to_string(idx) + " out of range 1.." + std::to_string(rank));
    }
    out = out | single(idx - 1);
    pos = end;
  }
  return out;
}

std::vector<std::size_t> RootSubset::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string RootSubset::str() const {
  std::string s;
  for (auto i : indices()) {
    if (!s.empty()) s += ',';
    s += std::to_string(i + 1);
  }
  return s;
}

std::vector<RootSubset> subsets_of(RootSubset s) {
  std::vector<RootSubset> out;
  // enumerate submasks, then sort ascending
  std::uint32_t m = s.bits();
  for (std::uint32_t sub = m;; sub = (sub - 1) & m) {
    out.emplace_back(sub);
    if (sub == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

RootDatum::RootDatum(std::string label, std::size_t central_rank, IntMatrix cartan)
    : label_(std::move(label)), central_rank_(central_rank), cartan_(std::move(cartan)) {}

RootDatum RootDatum::from_label(std::string_view label, std::size_t central_rank) {
  auto build = [](std::initializer_list<std::initializer_list<Coord>> rows) {
    IntMatrix m(rows.size(), rows.size());
    std::size_t i = 0;
    for (const auto& r : rows) {
      std::size_t j = 0;
      for (Coord x : r) m(i, j++) = x;
      ++i;
    }
    return m;
  };
  if (central_rank > 8) throw InputError("central rank too large");
  if (label == "A1") return RootDatum("A1", central_rank, build({{2}}));
  if (label == "A1xA1") return RootDatum("A1xA1", central_rank, build({{2, 0}, {0, 2}}));
  if (label == "A2") return RootDatum("A2", central_rank, build({{2, -1}, {-1, 2}}));
  // alpha_1 long, alpha_2 short
  if (label == "B2") return RootDatum("B2", central_rank, build({{2, -1}, {-2, 2}}));
  if (label == "A3") return RootDatum("A3", central_rank, build({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
  throw InputError("unsupported root datum '" + std::string(label) + "' (expected A1, A1xA1, A2, B2 or A3)");
}

LatticeVector RootDatum::simple_root(std::size_t i) const {
  LatticeVector v(rank());
  for (std::size_t k = 0; k < semisimple_rank(); ++k) v[central_rank_ + k] = cartan_(k, i);
  return v;
}

LatticeVector RootDatum::fundamental_weight(std::size_t i) const {
  return LatticeVector::unit(rank(), central_rank_ + i);
}

IntMatrix RootDatum::simple_reflection(std::size_t i) const {
  // s_i(l) = l - <alpha_i^vee, l> alpha_i, and <alpha_i^vee, l> = l[c+i]
  IntMatrix m = IntMatrix::identity(rank());
  const auto a = simple_root(i);
  for (std::size_t k = 0; k < rank(); ++k) m(k, central_rank_ + i) -= a[k];
  return m;
}

// ---------------------------------------------------------------------------

std::string WeylElement::word_string() const {
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i + 1);
  return s;
}

WeylGroup::WeylGroup(RootDatum datum) : datum_(std::move(datum)) {
  const std::size_t r = datum_.semisimple_rank();
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < r; ++i) gens.push_back(datum_.simple_reflection(i));

  // Breadth-first by length. Parents are visited in word order and generators
  // in index order, so each element is first reached by its least reduced word.
  elements_.push_back({IntMatrix::identity(datum_.rank()), {}, 0});
  index_.emplace(elements_[0].matrix, 0);
  std::size_t level_begin = 0;
  while (level_begin < elements_.size()) {
    const std::size_t level_end = elements_.size();
    for (std::size_t p = level_begin; p < level_end; ++p) {
      for (std::size_t i = 0; i < r; ++i) {
        IntMatrix m = elements_[p].matrix * gens[i];
        if (index_.count(m)) continue;
        WeylElement e{m, elements_[p].word, elements_[p].length + 1};
        e.word.push_back(static_cast<int>(i));
        index_.emplace(std::move(m), elements_.size());
        elements_.push_back(std::move(e));
      }
    }
    level_begin = level_end;
  }

  const std::size_t n = elements_.size();
  table_.resize(n * n);
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto it = index_.find(elements_[a].matrix * elements_[b].matrix);
      if (it == index_.end()) throw ConsistencyError("Weyl group not closed under multiplication");
      table_[a * n + b] = it->second;
      if (it->second == 0) inverse_[a] = b;
    }
  }
  simple_.assign(r, 0);
  for (std::size_t i = 0; i < r; ++i) simple_[i] = index_.at(gens[i]);

  right_descents_.resize(n);
  for (std::size_t w = 0; w < n; ++w) {
    RootSubset d;
    for (std::size_t i = 0; i < r; ++i)
      if (elements_[multiply(w, simple_[i])].length < elements_[w].length) d = d | RootSubset::single(i);
    right_descents_[w] = d;
  }

  // Roots, in simple-root coordinates: s_i(b) = b - (sum_j a_ij b_j) e_i.
  const IntMatrix& a = datum_.cartan();
  std::set<LatticeVector> seen;
  std::deque<LatticeVector> queue;
  for (std::size_t i = 0; i < r; ++i) {
    auto e = LatticeVector::unit(r, i);
    if (seen.insert(e).second) queue.push_back(e);
  }
  while (!queue.empty()) {
    LatticeVector b = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < r; ++i) {
      Coord pairing = 0;
      for (std::size_t j = 0; j < r; ++j) pairing += a(i, j) * b[j];
      LatticeVector c = b;
      c[i] -= pairing;
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  std::vector<LatticeVector> positive;
  for (const auto& b : seen) {
    bool nonneg = std::all_of(b.begin(), b.end(), [](Coord x) { return x >= 0; });
    bool nonpos = std::all_of(b.begin(), b.end(), [](Coord x) { return x <= 0; });
    if (nonneg == nonpos) throw ConsistencyError("root neither positive nor negative");
    if (nonneg) positive.push_back(b);
  }
  auto height = [](const LatticeVector& b) {
    Coord h = 0;
    for (Coord x : b) h += x;
    return h;
  };
  std::sort(positive.begin(), positive.end(), [&](const LatticeVector& x, const LatticeVector& y) {
    return std::pair(height(x), x) < std::pair(height(y), y);
  });
  auto to_weight = [&](const LatticeVector& b) {
    LatticeVector w(datum_.rank());
    for (std::size_t k = 0; k < r; ++k) {
      Coord s = 0;
      for (std::size_t j = 0; j < r; ++j) s += a(k, j) * b[j];
      w[datum_.central_rank() + k] = s;
    }
    return w;
  };
  for (const auto& b : positive) roots_.push_back(to_weight(b));
  positive_count_ = roots_.size();
  for (std::size_t k = 0; k < positive_count_; ++k) roots_.push_back(-roots_[k]);
  for (std::size_t k = 0; k < roots_.size(); ++k) root_sign_[roots_[k]] = k < positive_count_;
}

std::optional<std::size_t> WeylGroup::find(const IntMatrix& m) const {
  const auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> WeylGroup::find_word(std::string_view word) const {
  if (word == "e" || word.empty()) return identity();
  std::size_t w = identity();
  std::size_t pos = 0;
  while (pos < word.size()) {
    if (word[pos] != 's') return std::nullopt;
    std::size_t end = ++pos;
    while (end < word.size() && std::isdigit(static_cast<unsigned char>(word[end]))) ++end;
    if (end == pos) return std::nullopt;
    const auto idx = std::stoul(std::string(word.substr(pos, end - pos)));
    if (idx < 1 || idx > simple_.size()) return std::nullopt;
    w = multiply(w, simple_[idx - 1]);
    pos = end;
  }
  return w;
}

RootSubset WeylGroup::left_descents(std::size_t w) const {
  RootSubset d;
  const std::size_t winv = inverse(w);
  for (std::size_t i = 0; i < simple_.size(); ++i)
    if (!is_positive_root(act(winv, datum_.simple_root(i)))) d = d | RootSubset::single(i);
  return d;
}

LatticeVector WeylGroup::act(std::size_t w, const LatticeVector& weight) const {
  if (weight.rank() != datum_.rank()) throw InputError("weight rank mismatch");
  return elements_[w].matrix * weight;
}

bool WeylGroup::is_positive_root(const LatticeVector& root) const {
  const auto it = root_sign_.find(root);
  if (it == root_sign_.end()) throw InputError("not a root: " + root.str());
  return it->second;
}

std::size_t WeylGroup::inversion_count(std::size_t w) const {
  std::size_t n = 0;
  for (std::size_t k = 0; k < positive_count_; ++k)
    if (!is_positive_root(act(w, roots_[k]))) ++n;
  return n;
}

std::vector<std::size_t> WeylGroup::parabolic_subgroup(RootSubset parabolic) const {
  // w lies in W_I iff its (any) reduced word only uses letters of I
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < order(); ++w) {
    const auto& word = elements_[w].word;
    if (std::all_of(word.begin(), word.end(), [&](int i) { return parabolic.contains(static_cast<std::size_t>(i)); }))
      out.push_back(w);
  }
  return out;
}

std::vector<std::size_t> WeylGroup::minimal_coset_reps(RootSubset parabolic) const {
  if (!parabolic.is_subset_of(datum_.simple_roots())) throw InputError("parabolic subset out of range");
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < order(); ++w)
    if ((right_descents_[w] & parabolic).empty()) out.push_back(w);
  return out;
}

std::vector<std::size_t> WeylGroup::c_cell(RootSubset cell) const {
  if (!cell.is_subset_of(datum_.simple_roots())) throw InputError("cell subset out of range");
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < order(); ++w)
    if (right_descents_[w] == cell) out.push_back(w);
  return out;
}

// ---------------------------------------------------------------------------

WeylGroup generate_weyl(const RootDatum& datum) { return WeylGroup(datum); }

std::vector<WeylElement> minimal_coset_reps(const WeylGroup& group, RootSubset parabolic) {
  std::vector<WeylElement> out;
  for (auto w : group.minimal_coset_reps(parabolic)) out.push_back(group.element(w));
  return out;
}

std::vector<WeylElement> c_partition(const WeylGroup& group, RootSubset cell) {
  std::vector<WeylElement> out;
  for (auto w : group.c_cell(cell)) out.push_back(group.element(w));
  return out;
}

LatticeVector act(const WeylElement& w, const LatticeVector& weight) {
  if (weight.rank() != w.matrix.cols()) throw InputError("weight rank mismatch");
  return w.matrix * weight;
}

}  // namespace eqk
