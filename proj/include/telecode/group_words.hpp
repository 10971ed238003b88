#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "telecode/checks.hpp"
#include "telecode/homomorphisms.hpp"
#include "telecode/matrix_core.hpp"
#include "telecode/weyl_pauli.hpp"

namespace telecode {

inline constexpr int kInfiniteOrder = 0;

// Free product of cyclic groups: one named factor per generator, order m ≥ 2 or
// kInfiniteOrder for ℤ.
struct FactorSpec {
  std::vector<std::string> names;
  std::vector<int> orders;

  FactorSpec(std::vector<std::string> names, std::vector<int> orders);
  std::size_t size() const { return names.size(); }
  std::size_t index_of(std::string_view name) const;  // throws UsageError
  bool operator==(const FactorSpec&) const = default;
};

using SpecPtr = std::shared_ptr<const FactorSpec>;

SpecPtr make_spec(std::vector<std::string> names, std::vector<int> orders);
SpecPtr spec_z2_z2_z();       // s0, s1 of order 2; g of infinite order
SpecPtr spec_free3();         // s0, s1, g free
SpecPtr spec_star_z2(int count);  // s0 .. s{count-1}, each of order 2
SpecPtr spec_z3_z3();         // a, b of order 3
SpecPtr spec_free(int count, const std::string& prefix = "g");  // g0 .. g{count-1}
SpecPtr spec_free_d2(int d);  // g{l}{m}, generator index l*d + m (d ≤ 10)

struct Letter {
  std::size_t factor = 0;
  long exponent = 1;
  bool operator==(const Letter&) const = default;
};

// Reduced word: adjacent letters lie in distinct factors and every exponent is
// in 1..m-1 (finite order m) or nonzero (infinite order).
class Word {
 public:
  explicit Word(SpecPtr spec);  // identity

  static Word reduce(SpecPtr spec, const std::vector<Letter>& raw);
  static Word generator(SpecPtr spec, std::string_view name, long exponent = 1);
  // Whitespace-separated tokens "name", "name<exp>" or "name^<exp>", e.g. "a b2 a2 b",
  // "s2 s0 s1 s2", "g^-1". The longest generator name matching a token prefix wins.
  // "e" or "1" (when not generator names) denote the identity.
  static Word parse(SpecPtr spec, std::string_view text);

  const SpecPtr& spec() const { return spec_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t syllables() const { return letters_.size(); }
  long length() const;  // Σ |exponent| with finite-order exponents taken in the balanced range

  Word operator*(const Word& rhs) const;
  Word inverse() const;
  Word pow(long n) const;
  std::string to_string() const;

  bool operator==(const Word& other) const;
  bool operator<(const Word& other) const;  // for containers; compares letters only

 private:
  SpecPtr spec_;
  std::vector<Letter> letters_;
};

// All reduced words of generator length ≤ radius (each letter a generator or its inverse).
std::vector<Word> ball(const SpecPtr& spec, int radius);

struct GroupEmbedding {
  std::string name;
  SpecPtr source;
  SpecPtr target;
  std::vector<Word> images;  // one per source factor

  Word apply(const Word& w) const;
  // Images of source relators g^m (finite-order factors) reduce to the identity.
  CheckList relator_checks() const;
};

Word embed(const Word& w, const GroupEmbedding& e);

GroupEmbedding embedding_iii();  // ℤ2*ℤ2*ℤ → *4 ℤ2: s0↦s0, s1↦s1, g↦s2 s3
GroupEmbedding embedding_iv();   // ℤ2*ℤ2*ℤ → *3 ℤ2: s0↦s0, s1↦s1, g↦s2 s0 s1 s2
GroupEmbedding embedding_v();    // F3 → ℤ3*ℤ3: s0↦aba, s1↦bab, g↦ab²a²b
GroupEmbedding embedding_by_name(std::string_view name);

// Element g v^j w^k of the crossed product of C*(F_{d²}), g a reduced word in the
// generators g_{lm}, times a scalar.
struct CrossedWord {
  int d = 2;
  Word base;
  int tail_j = 0;
  int tail_k = 0;
  cplx coefficient = 1.0;

  CrossedWord(int d, Word base, int tail_j = 0, int tail_k = 0, cplx coefficient = 1.0);
  // Builds from (l, m, exponent) triples; throws UsageError if two neighbouring
  // letters share a generator or an exponent is zero.
  static CrossedWord from_letters(int d, const std::vector<PauliLetter>& letters, int tail_j = 0,
                                  int tail_k = 0, cplx coefficient = 1.0);
  PauliWord pauli_word() const;
};

// Canonical trace: the coefficient when the base is trivial and the tail is (0,0), else 0.
cplx crossed_trace(const CrossedWord& x);
cplx crossed_trace(const std::vector<CrossedWord>& sum);

struct Sigma2WordImage {
  cplx lambda = 1.0;
  std::vector<PauliLabel> labels;  // collapsed T labels; all but the last read as adjoints
  std::vector<long> exponents;
  bool trivial_base = true;
  cplx trace = 0.0;  // trace of the image under tr ⊗ τ
};

Sigma2WordImage sigma2_word_image(const CrossedWord& x);

// Direct product U_{j1,k1}^{e1} ··· U_{jn,kn}^{en} (T_tail ⊗ 1) in a concrete representation.
CMatrix sigma2_word_matrix(const BrownRep& brown, const CrossedWord& x);
// λ T_1^† U^{e1} T_{Δ1}^† ··· U^{en} T_last from the collapsed form.
CMatrix collapsed_word_matrix(const BrownRep& brown, const Sigma2WordImage& img);

}  // namespace telecode
