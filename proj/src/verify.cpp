#include "gpoly/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "gpoly/catalog.hpp"
#include "gpoly/decomposition.hpp"
#include "gpoly/error.hpp"

namespace gpoly {

std::vector<SchubertMatroid> all_schubert_matroids(int max_n) {
  std::vector<SchubertMatroid> out;
  for (int n = 1; n <= max_n; ++n) {
    const std::uint32_t count = std::uint32_t{1} << n;
    for (std::uint32_t u = 1; u < count; ++u) out.push_back(SchubertMatroid::create(n, ElementSet(u)));
  }
  return out;
}

namespace {

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  // Runs one instance; `body` returns an empty string on success.
  void run(const std::string& instance, const std::function<std::string()>& body) {
    ++result_.instances;
    if (!result_.passed) return;
    std::string why;
    try {
      why = body();
    } catch (const std::exception& e) {
      why = std::string("threw: ") + e.what();
    }
    if (!why.empty()) {
      result_.passed = false;
      result_.counterexample = instance + ": " + why;
    }
  }

  PropertyResult result() const { return result_; }

 private:
  PropertyResult result_;
};

std::string differ(const std::string& what_a, const IntPolynomial& a, const std::string& what_b,
                   const IntPolynomial& b) {
  if (a == b) return {};
  return what_a + " " + to_text(a) + " != " + what_b + " " + to_text(b);
}

Integer binomial(long n, long k) {
  Integer out;
  if (k < 0 || k > n) return 0;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// Portable sample: partial Fisher-Yates driven by mt19937_64 words.
std::vector<SchubertMatroid> sample(std::vector<SchubertMatroid> all, int k, std::uint64_t seed) {
  if (k <= 0 || k >= static_cast<int>(all.size())) return all;
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> idx(all.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  for (int i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (idx.size() - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  std::vector<SchubertMatroid> out;
  for (std::size_t i : idx) out.push_back(all[i]);
  return out;
}

ElementOrder random_order(int n, std::mt19937_64& rng) {
  std::vector<int> seq(n);
  for (int i = 0; i < n; ++i) seq[i] = i + 1;
  for (int i = n - 1; i > 0; --i) std::swap(seq[i], seq[rng() % (i + 1)]);
  return ElementOrder::from_sequence(std::move(seq));
}

void schubert_properties(const VerifyOptions& opt, std::vector<PropertyResult>& out) {
  const auto instances = sample(all_schubert_matroids(opt.max_n), opt.samples, opt.seed);
  const auto natural = [](const SchubertMatroid& s) { return ElementOrder::natural(s.size()); };

  Check equal("delannoy-equals-activities");
  Check oracle("path-activities-match-oracle");
  Check uniform("uniform-closed-form");
  Check lemma("admissible-iff-activities-0-1");
  Check bijection("diagonal-count-is-binomial-alpha");
  Check linear("linear-term-is-beta");
  Check positive("shifted-g-nonnegative");
  Check self("decomposition-self-consistency");

  for (const auto& s : instances) {
    const std::string name = to_string(s);
    const Matroid m = sch_to_matroid(s);
    const bool clean = is_loopless_coloopless(s);
    const IntPolynomial g = clean ? g_activities(s) : IntPolynomial{};

    positive.run(name, [&]() -> std::string {
      const IntPolynomial shifted = compose_shift(divide_by_t(g), -1);
      if (nonnegative(shifted)) return {};
      return "g~(t-1) = " + to_text(shifted) + " has a negative coefficient";
    });

    oracle.run(name, [&]() -> std::string {
      const auto ord = natural(s);
      for (ElementSet b : m.bases()) {
        const Activities fast = path_activities(s, b);
        const Activities slow = activities(m, ord, b);
        if (fast != slow) {
          return "basis " + to_string(b) + ": path (" + std::to_string(fast.internal) + "," +
                 std::to_string(fast.external) + ") vs circuits (" + std::to_string(slow.internal) +
                 "," + std::to_string(slow.external) + ")";
        }
      }
      return {};
    });

    if (!clean) continue;

    equal.run(name, [&] { return differ("delannoy", g_delannoy(s, opt.rules), "activities", g); });

    if (s.upper() == ElementSet::interval(1, s.rank())) {
      uniform.run(name, [&] {
        return differ("delannoy", g_delannoy(s, opt.rules), "closed form", g_uniform(s.rank(), s.size()));
      });
    }

    lemma.run(name, [&]() -> std::string {
      for (const auto& p : enumerate_delannoy(s, DelannoyRules::region_only())) {
        const bool admissible = is_admissible(s, p, opt.rules);
        const bool qualifies = path_activities(s, basis_of_delannoy(s, p)) == Activities{0, 1};
        if (admissible != qualifies) {
          return "path " + p.word() + (admissible ? " admissible" : " not admissible") +
                 " but B_P " + (qualifies ? "has" : "lacks") + " activities (0,1)";
        }
      }
      return {};
    });

    bijection.run(name, [&]() -> std::string {
      std::map<std::pair<std::uint32_t, int>, long> by_basis;
      for (const auto& p : enumerate_delannoy(s, opt.rules)) {
        ++by_basis[{basis_of_delannoy(s, p).bits(), p.diagonals()}];
      }
      const auto ord = natural(s);
      for (ElementSet b : m.bases()) {
        if (path_activities(s, b) != Activities{0, 1}) continue;
        const int a = alpha(m, ord, b);
        for (int d = 0; d <= s.rank(); ++d) {
          auto it = by_basis.find({b.bits(), d});
          const long got = it == by_basis.end() ? 0 : it->second;
          if (Integer(got) != binomial(a, d)) {
            return "basis " + to_string(b) + " with alpha " + std::to_string(a) + " has " +
                   std::to_string(got) + " paths with " + std::to_string(d) + " diagonals";
          }
        }
      }
      return {};
    });

    linear.run(name, [&]() -> std::string {
      const long b = beta(m);
      if (g.coeff(1) == b) return {};
      return "linear coefficient " + g.coeff(1).get_str() + " vs beta " + std::to_string(b);
    });

    self.run(name, [&] { return differ("decomposition", g_polynomial(m), "activities", g); });
  }

  for (const Check* c : {&equal, &oracle, &uniform, &lemma, &bijection, &linear, &positive, &self}) {
    out.push_back(c->result());
  }
}

void catalog_properties(const VerifyOptions& opt, std::vector<PropertyResult>& out) {
  Check known("catalog-known-values");
  Check lambda("lambda-recursion-equals-closed-form");
  Check companion("chain-schubert-cyclic-flats");
  Check crapo("tutte-order-independent");

  std::mt19937_64 rng(opt.seed);
  for (const auto& entry : known_g_values()) {
    std::string name = entry.key;
    Params params;
    if (const auto colon = name.find(':'); colon != std::string::npos) {
      params = parse_params(name.substr(colon + 1));
      name = name.substr(0, colon);
    }
    const Matroid m = as_matroid(realize(catalog_lookup(name, params)));

    known.run(entry.key, [&]() -> std::string {
      const IntPolynomial g = g_polynomial(m);
      if (auto d = differ("computed", g, "reference", entry.g); !d.empty()) return d;
      return differ("computed shifted", compose_shift(divide_by_t(g), -1), "reference", entry.shifted);
    });

    if (!is_connected(m) || has_loops_or_coloops(m)) continue;
    const ChainPoset poset = ChainPoset::build(m);

    lambda.run(entry.key, [&]() -> std::string {
      for (std::size_t i = 0; i < poset.chains().size(); ++i) {
        if (poset.lambda(i) != poset.lambda_closed_form(i)) {
          return "chain " + to_string(poset.chains()[i]) + ": recursion " + poset.lambda(i).get_str() +
                 " vs closed form " + poset.lambda_closed_form(i).get_str();
        }
      }
      return {};
    });

    companion.run(entry.key, [&]() -> std::string {
      for (const auto& chain : poset.chains()) {
        const auto cs = schubert_of_chain(m.size(), chain);
        // relabel chain flats into the Schubert labels
        std::vector<int> label_of(m.size() + 1);
        for (std::size_t k = 0; k < cs.relabel.size(); ++k) label_of[cs.relabel[k]] = static_cast<int>(k) + 1;
        std::vector<ElementSet> expected;
        for (ElementSet f : chain.flats) {
          ElementSet g;
          for (int e : f) g.insert(label_of[e]);
          expected.push_back(g);
        }
        std::sort(expected.begin(), expected.end(), shortlex_less);
        const Matroid sm = sch_to_matroid(cs.schubert);
        if (cyclic_flats(sm) != expected) return "chain " + to_string(chain) + " vs " + to_string(cs.schubert);
        for (std::size_t j = 0; j < chain.flats.size(); ++j) {
          ElementSet g;
          for (int e : chain.flats[j]) g.insert(label_of[e]);
          if (sm.rank_of(g) != chain.ranks[j]) return "rank mismatch on chain " + to_string(chain);
        }
      }
      return {};
    });

    if (m.size() <= 9) {
      crapo.run(entry.key, [&]() -> std::string {
        const BivariatePolynomial base = tutte(m);
        if (base.eval(1, 1) != static_cast<long>(m.bases().size())) return "T(1,1) != number of bases";
        for (int k = 0; k < 5; ++k) {
          const ElementOrder ord = random_order(m.size(), rng);
          if (!(tutte(m, ord) == base)) return "Tutte polynomial changes under a reordering";
        }
        return {};
      });
    }
  }
  for (const Check* c : {&known, &lambda, &companion, &crapo}) out.push_back(c->result());
}

}  // namespace

std::vector<PropertyResult> run_verification(const VerifyOptions& options) {
  if (options.max_n < 1 || options.max_n > 12) throw Error("--max-n must be in 1..12");
  if (options.samples < 0) throw Error("--samples must be >= 0");
  std::vector<PropertyResult> out;
  schubert_properties(options, out);
  if (options.include_catalog) catalog_properties(options, out);
  return out;
}

}  // namespace gpoly
