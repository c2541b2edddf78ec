#include "gpoly/decomposition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "gpoly/error.hpp"

namespace gpoly {

std::string to_string(const CyclicFlatChain& c) {
  std::string out;
  for (std::size_t j = 0; j < c.flats.size(); ++j) {
    if (j) out += " < ";
    out += to_string(c.flats[j]);
  }
  return out;
}

ChainPoset ChainPoset::build(const Matroid& m) {
  if (has_loops_or_coloops(m)) throw Error("chain poset needs a matroid without loops or coloops");
  ChainPoset p;
  p.flats_ = gpoly::cyclic_flats(m);
  const ElementSet ground = m.ground();

  // proper cyclic flats, in shortlex order so containment only goes forward
  std::vector<int> interior;
  for (int k = 0; k < static_cast<int>(p.flats_.size()); ++k) {
    if (!p.flats_[k].empty() && p.flats_[k] != ground) interior.push_back(k);
  }
  const auto rank = rank_table(m);

  std::vector<int> stack;
  auto emit = [&] {
    CyclicFlatChain c;
    c.flats.push_back(ElementSet{});
    c.ranks.push_back(0);
    for (int k : stack) {
      c.flats.push_back(p.flats_[k]);
      c.ranks.push_back(rank[p.flats_[k].bits()]);
    }
    c.flats.push_back(ground);
    c.ranks.push_back(m.rank());
    p.chains_.push_back(std::move(c));
    std::vector<int> members = stack;
    p.members_.push_back(std::move(members));
  };
  auto extend = [&](auto&& self, std::size_t from) -> void {
    emit();
    for (std::size_t a = from; a < interior.size(); ++a) {
      const int k = interior[a];
      if (!stack.empty() && !p.flats_[stack.back()].proper_subset_of(p.flats_[k])) continue;
      stack.push_back(k);
      self(self, a + 1);
      stack.pop_back();
    }
  };
  extend(extend, 0);

  // Möbius recursion from the top: longer chains first.
  const std::size_t count = p.chains_.size();
  std::vector<std::size_t> by_length(count);
  for (std::size_t i = 0; i < count; ++i) by_length[i] = i;
  std::stable_sort(by_length.begin(), by_length.end(), [&](std::size_t a, std::size_t b) {
    return p.members_[a].size() > p.members_[b].size();
  });
  std::vector<Integer> mu(count);
  for (std::size_t i : by_length) {
    Integer acc = 1;  // μ(1̂, 1̂)
    for (std::size_t j = 0; j < count; ++j) {
      if (p.below(i, j)) acc += mu[j];
    }
    mu[i] = -acc;
  }
  p.lambda_.resize(count);
  for (std::size_t i = 0; i < count; ++i) p.lambda_[i] = -mu[i];
  return p;
}

std::optional<std::size_t> ChainPoset::find(const CyclicFlatChain& c) const {
  for (std::size_t i = 0; i < chains_.size(); ++i) {
    if (chains_[i] == c) return i;
  }
  return std::nullopt;
}

bool ChainPoset::below(std::size_t i, std::size_t j) const {
  const auto& a = members_[i];
  const auto& b = members_[j];
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Integer ChainPoset::lambda_closed_form(std::size_t i) const {
  Integer sum = 0;
  for (std::size_t j = 0; j < chains_.size(); ++j) {
    if (j != i && !below(i, j)) continue;
    const std::size_t extra = members_[j].size() - members_[i].size();
    sum += (extra % 2 == 0) ? 1 : -1;
  }
  return sum;
}

Integer lambda_of(const ChainPoset& p, const CyclicFlatChain& c) {
  const auto i = p.find(c);
  if (!i) throw Error("chain " + to_string(c) + " is not in the chain poset");
  return p.lambda(*i);
}

ChainSchubert schubert_of_chain(int n, const CyclicFlatChain& c) {
  const auto& f = c.flats;
  if (f.size() < 2 || f.size() != c.ranks.size()) throw Error("malformed chain: " + to_string(c));
  if (!f.front().empty()) throw Error("chain must start at the empty set: " + to_string(c));
  if (f.back() != ElementSet::full(n)) throw Error("chain must end at the ground set: " + to_string(c));
  if (c.ranks.front() != 0) throw Error("the empty flat must have rank 0");

  ChainSchubert out;
  ElementSet upper;
  for (std::size_t j = 1; j < f.size(); ++j) {
    if (!f[j - 1].proper_subset_of(f[j])) throw Error("chain is not strictly increasing: " + to_string(c));
    const int rank_step = c.ranks[j] - c.ranks[j - 1];
    const ElementSet block = f[j] - f[j - 1];
    if (rank_step <= 0 || rank_step > block.size()) {
      throw Error("chain ranks are inconsistent with its flats: " + to_string(c));
    }
    const int offset = f[j - 1].size();
    for (int k = 1; k <= rank_step; ++k) upper.insert(offset + k);
    for (int e : block) out.relabel.push_back(e);
  }
  out.schubert = SchubertMatroid::create(n, upper);
  return out;
}

namespace {

class SchubertGCache {
 public:
  IntPolynomial get(const SchubertMatroid& s) {
    const Key key{s.size(), s.upper().bits()};
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    IntPolynomial g = is_loopless_coloopless(s) ? g_activities(s) : IntPolynomial{};
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(key, g);
    return g;
  }

 private:
  using Key = std::pair<int, std::uint32_t>;
  std::mutex mu_;
  std::map<Key, IntPolynomial> cache_;
};

SchubertGCache& schubert_cache() {
  static SchubertGCache cache;
  return cache;
}

}  // namespace

IntPolynomial g_schubert_cached(const SchubertMatroid& s) { return schubert_cache().get(s); }

std::vector<DecompositionTerm> decompose(const Matroid& m) {
  const ChainPoset p = ChainPoset::build(m);
  std::vector<DecompositionTerm> terms;
  terms.reserve(p.chains().size());
  for (std::size_t i = 0; i < p.chains().size(); ++i) {
    const auto& chain = p.chains()[i];
    ChainSchubert cs = schubert_of_chain(m.size(), chain);
    IntPolynomial g = g_schubert_cached(cs.schubert);
    terms.push_back({chain, p.lambda(i), std::move(cs.schubert), std::move(g)});
  }
  return terms;
}

IntPolynomial g_polynomial(const Matroid& m) {
  if (has_loops_or_coloops(m)) return {};
  const auto blocks = connected_components(m);
  if (blocks.size() > 1) {
    IntPolynomial product = IntPolynomial::one();
    for (ElementSet block : blocks) product = mul(product, g_polynomial(restriction(m, block)));
    return product;
  }
  IntPolynomial sum;
  for (const auto& term : decompose(m)) {
    if (term.lambda == 0) continue;
    sum += scale(term.g, term.lambda);
  }
  return sum;
}

}  // namespace gpoly
