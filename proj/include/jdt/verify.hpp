#pragma once

// Randomized and exhaustive sweeps over the exact identities. Each sweep
// reports how many cases it ran and the first failing case, if any.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "jdt/dynamics.hpp"
#include "jdt/rng.hpp"
#include "jdt/rsk.hpp"
#include "jdt/sampling.hpp"
#include "jdt/spectral.hpp"
#include "jdt/tableau.hpp"

namespace jdt {

inline constexpr std::uint32_t kVerifyStreamId = 4;

struct IdentityResult {
  explicit IdentityResult(std::string n) : name(std::move(n)) {}

  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::uint64_t skipped = 0;  // cases outside the checked statement's precondition
  std::string first_failure;

  bool ok() const { return failures == 0; }

  void record(bool passed, const std::string& what) {
    ++cases;
    if (passed) return;
    if (failures++ == 0) first_failure = what;
  }
};

namespace detail {

inline std::string word_text(const std::vector<int>& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
  return os.str();
}

inline Rng verify_rng(std::uint64_t seed, std::uint64_t sweep) {
  return Rng(RngSpec{seed, namespaced_stream(kVerifyStreamId, sweep)});
}

}  // namespace detail

// pos_n(j^i T) == pos_{n-i}(J^i T) for every i. Squares up to exhaustive_side
// are enumerated, larger ones sampled.
inline IdentityResult happy_box_sweep(const std::vector<int>& sides, int samples,
                                      std::uint64_t seed, int exhaustive_side = 2) {
  IdentityResult r{"happy-box"};
  Rng rng = detail::verify_rng(seed, 1);
  auto check = [&](const StandardTableau& t) {
    const auto fail = happy_box_first_failure(t);
    r.record(!fail, fail ? "step " + std::to_string(*fail) + " of\n" + to_text(t) : "");
  };
  for (int side : sides) {
    const auto shape = YoungDiagram::square(side);
    if (side <= exhaustive_side) {
      for (const auto& t : enumerate_syt(shape)) check(t);
    } else {
      for (int s = 0; s < samples; ++s) check(sample_uniform_syt(shape, rng));
    }
  }
  return r;
}

struct PermutationSweep {
  IdentityResult shift{"shift identity"};
  IdentityResult path{"path equivalence"};
};

// Exhaustive over S_exhaustive_n, then `samples` random permutations of each
// listed length.
inline PermutationSweep permutation_sweep(int exhaustive_n, const std::vector<int>& lengths,
                                          int samples, std::uint64_t seed) {
  PermutationSweep r;
  auto check = [&](const std::vector<int>& sigma) {
    const std::string w = detail::word_text(sigma);
    r.shift.record(check_shift_identity(sigma), w);
    r.path.record(path_equivalence_check(sigma), w);
  };
  if (exhaustive_n >= 2) {
    std::vector<int> sigma(static_cast<std::size_t>(exhaustive_n));
    std::iota(sigma.begin(), sigma.end(), 1);
    do check(sigma);
    while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  Rng rng = detail::verify_rng(seed, 2);
  for (int n : lengths)
    for (int s = 0; s < samples; ++s) check(sample_permutation(n, rng));
  return r;
}

// Greene shape of every prefix against the insertion shape.
inline IdentityResult greene_sweep(int words, int max_length, std::uint64_t seed) {
  IdentityResult r{"greene shape"};
  Rng rng = detail::verify_rng(seed, 3);
  const int cap = std::min(max_length, kGreeneMaxLength);
  for (int w = 0; w < words; ++w) {
    const auto word = sample_permutation(rng.between(1, cap), rng);
    bool good = true;
    for (int p = 1; p <= static_cast<int>(word.size()) && good; ++p) {
      const std::vector<int> prefix(word.begin(), word.begin() + p);
      good = greene_shape(word, p) == rsk_word(prefix).recording.shape();
    }
    r.record(good, detail::word_text(word));
  }
  return r;
}

// M is Pieri iff j(M) is, on `each` Pieri and `each` non-Pieri tableaux of
// the square, alternating k over ks.
inline IdentityResult pieri_sweep(int side, const std::vector<int>& ks, int each,
                                  std::uint64_t seed) {
  IdentityResult r{"pieri preservation"};
  Rng rng = detail::verify_rng(seed, 4);
  const auto shape = YoungDiagram::square(side);
  for (int i = 0; i < 2 * each; ++i) {
    const int k = ks[static_cast<std::size_t>(i) % ks.size()];
    const bool want_pieri = i < each;
    StandardTableau m;
    if (want_pieri) {
      m = sample_uniform_pieri(shape, k, rng);
    } else {
      do m = sample_uniform_syt(shape, rng);
      while (is_pieri(m, k));
    }
    const bool before = is_pieri(m, k);
    const bool after = is_pieri(jdt_slide(m).after, k);
    r.record(before == want_pieri && before == after,
             "k=" + std::to_string(k) + "\n" + to_text(m));
  }
  return r;
}

struct PsiSweep {
  IdentityResult strict{"psi~ weakly decreasing"};
  // Information only: violations under the inclusive tie rule.
  std::uint64_t inclusive_violations = 0;
};

inline PsiSweep psi_sweep(int couplings, int side, int max_k, std::uint64_t seed) {
  PsiSweep r;
  Rng rng = detail::verify_rng(seed, 5);
  auto decreasing = [](const std::vector<Fraction>& s) {
    for (std::size_t q = 1; q < s.size(); ++q)
      if (s[q] > s[q - 1]) return false;
    return true;
  };
  for (int i = 0; i < couplings; ++i) {
    const int k = 1 + i % max_k;
    const auto c = sample_synthetic_coupling(side, k, rng);
    r.strict.record(decreasing(psi_tilde_sequence(c, TieRule::kStrict)),
                    "water\n" + to_text(c.water) + "multi\n" + to_text(c.multi));
    if (!decreasing(psi_tilde_sequence(c, TieRule::kInclusive))) ++r.inclusive_violations;
  }
  return r;
}

// Every shape with at most max_size boxes, every window a..b of at most
// max_window indices, every listed polynomial. Windows that no tableau of the
// shape orders as u_a < ... < u_b are counted as skipped.
inline IdentityResult lemma_sweep(int max_size, int max_window,
                                  const std::vector<std::string>& polys) {
  IdentityResult r{"expectation lemma"};
  std::vector<SymmetricPolynomial> ws;
  for (const auto& p : polys) ws.push_back(SymmetricPolynomial::parse(p));
  for (int n = 1; n <= max_size; ++n)
    for (const auto& shape : partitions_of(n)) {
      const auto basis = enumerate_syt(shape);
      auto ordered_somewhere = [&](int a, int b) {
        for (const auto& t : basis) {
          bool ok = true;
          for (int s = a; s < b && ok; ++s) ok = position_of(t, s).u() < position_of(t, s + 1).u();
          if (ok) return true;
        }
        return false;
      };
      for (int a = 1; a <= n; ++a)
        for (int b = a; b <= std::min(n, a + max_window - 1); ++b) {
          if (!ordered_somewhere(a, b)) {
            r.skipped += ws.size();
            continue;
          }
          for (std::size_t i = 0; i < ws.size(); ++i) {
            const auto c = lemma_expvalue_check(shape, a, b, ws[i]);
            std::ostringstream what;
            what << "shape " << shape << " a=" << a << " b=" << b << " W=" << polys[i]
                 << " lhs=" << to_string(c.lhs) << " rhs=" << to_string(c.rhs);
            r.record(c.equal, what.str());
          }
        }
    }
  return r;
}

inline IdentityResult hook_sweep(int max_size) {
  IdentityResult r{"hook formula"};
  for (int n = 1; n <= max_size; ++n)
    for (const auto& shape : partitions_of(n)) {
      std::ostringstream what;
      what << "shape " << shape;
      r.record(hook_dimension(shape) == BigInt(enumerate_syt(shape).size()), what.str());
    }
  return r;
}

}  // namespace jdt
