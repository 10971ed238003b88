#include "telecode/group_words.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "telecode/errors.hpp"

namespace telecode {

FactorSpec::FactorSpec(std::vector<std::string> n, std::vector<int> o) : names(std::move(n)), orders(std::move(o)) {
  if (names.empty()) throw UsageError("FactorSpec: no factors");
  if (names.size() != orders.size()) throw UsageError("FactorSpec: names and orders differ in length");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw UsageError("FactorSpec: empty generator name");
    if (!seen.insert(names[i]).second) throw UsageError("FactorSpec: duplicate generator " + names[i]);
    if (orders[i] != kInfiniteOrder && orders[i] < 2)
      throw UsageError("FactorSpec: order of " + names[i] + " must be ≥ 2 or infinite");
  }
}

std::size_t FactorSpec::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw UsageError("unknown generator '" + std::string(name) + "'");
}

SpecPtr make_spec(std::vector<std::string> names, std::vector<int> orders) {
  return std::make_shared<const FactorSpec>(std::move(names), std::move(orders));
}

SpecPtr spec_z2_z2_z() { return make_spec({"s0", "s1", "g"}, {2, 2, kInfiniteOrder}); }
SpecPtr spec_free3() { return make_spec({"s0", "s1", "g"}, {kInfiniteOrder, kInfiniteOrder, kInfiniteOrder}); }

SpecPtr spec_star_z2(int count) {
  std::vector<std::string> n;
  for (int i = 0; i < count; ++i) n.push_back("s" + std::to_string(i));
  return make_spec(std::move(n), std::vector<int>(static_cast<std::size_t>(count), 2));
}

SpecPtr spec_z3_z3() { return make_spec({"a", "b"}, {3, 3}); }

SpecPtr spec_free(int count, const std::string& prefix) {
  std::vector<std::string> n;
  for (int i = 0; i < count; ++i) n.push_back(prefix + std::to_string(i));
  return make_spec(std::move(n), std::vector<int>(static_cast<std::size_t>(count), kInfiniteOrder));
}

SpecPtr spec_free_d2(int d) {
  if (d < 2 || d > 10) throw UsageError("spec_free_d2: d must be in 2..10");
  std::vector<std::string> n;
  for (int l = 0; l < d; ++l)
    for (int m = 0; m < d; ++m) n.push_back("g" + std::to_string(l) + std::to_string(m));
  return make_spec(std::move(n), std::vector<int>(static_cast<std::size_t>(d * d), kInfiniteOrder));
}

namespace {

long normalize_exponent(long e, int order) {
  if (order == kInfiniteOrder) return e;
  long r = e % order;
  return r < 0 ? r + order : r;
}

long balanced(long e, int order) {
  if (order == kInfiniteOrder) return e;
  return e > order / 2 ? e - order : e;
}

}  // namespace

Word::Word(SpecPtr spec) : spec_(std::move(spec)) {
  if (!spec_) throw UsageError("Word: null spec");
}

Word Word::reduce(SpecPtr spec, const std::vector<Letter>& raw) {
  Word w(std::move(spec));
  auto& st = w.letters_;
  for (const auto& l : raw) {
    if (l.factor >= w.spec_->size()) throw UsageError("Word: letter references a missing factor");
    const int ord = w.spec_->orders[l.factor];
    long e = normalize_exponent(l.exponent, ord);
    if (e == 0) continue;
    if (!st.empty() && st.back().factor == l.factor) {
      const long merged = normalize_exponent(st.back().exponent + e, ord);
      if (merged == 0)
        st.pop_back();
      else
        st.back().exponent = merged;
    } else {
      st.push_back({l.factor, e});
    }
  }
  return w;
}

Word Word::generator(SpecPtr spec, std::string_view name, long exponent) {
  const auto i = spec->index_of(name);
  return reduce(std::move(spec), {{i, exponent}});
}

Word Word::parse(SpecPtr spec, std::string_view text) {
  std::vector<Letter> raw;
  std::string s(text);
  for (auto& c : s)
    if (c == '*' || c == ',' || c == '.') c = ' ';
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    std::size_t best = spec->size();
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < spec->size(); ++i) {
      const auto& n = spec->names[i];
      if (tok.compare(0, n.size(), n) == 0 && n.size() > best_len) {
        best = i;
        best_len = n.size();
      }
    }
    if (best == spec->size()) {
      if (tok == "e" || tok == "1") continue;
      throw UsageError("unknown generator in token '" + tok + "'");
    }
    std::string_view rest(tok);
    rest.remove_prefix(best_len);
    long e = 1;
    if (!rest.empty()) {
      if (rest.front() == '^') rest.remove_prefix(1);
      if (!rest.empty() && rest.front() == '+') rest.remove_prefix(1);
      const auto* first = rest.data();
      const auto* last = rest.data() + rest.size();
      auto [ptr, ec] = std::from_chars(first, last, e);
      if (rest.empty() || ec != std::errc() || ptr != last)
        throw UsageError("malformed exponent in token '" + tok + "'");
    }
    raw.push_back({best, e});
  }
  return reduce(std::move(spec), raw);
}

long Word::length() const {
  long n = 0;
  for (const auto& l : letters_) n += std::labs(balanced(l.exponent, spec_->orders[l.factor]));
  return n;
}

Word Word::operator*(const Word& rhs) const {
  if (!(*spec_ == *rhs.spec_)) throw UsageError("Word product: words live in different groups");
  std::vector<Letter> raw = letters_;
  raw.insert(raw.end(), rhs.letters_.begin(), rhs.letters_.end());
  return reduce(spec_, raw);
}

Word Word::inverse() const {
  std::vector<Letter> raw(letters_.rbegin(), letters_.rend());
  for (auto& l : raw) l.exponent = -l.exponent;
  return reduce(spec_, raw);
}

Word Word::pow(long n) const {
  Word base = n >= 0 ? *this : inverse();
  Word out(spec_);
  for (long i = 0; i < std::labs(n); ++i) out = out * base;
  return out;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    const auto& name = spec_->names[l.factor];
    out += name;
    if (l.exponent != 1) {
      const bool caret = l.exponent < 0 || std::isdigit(static_cast<unsigned char>(name.back()));
      out += (caret ? "^" : "") + std::to_string(l.exponent);
    }
  }
  return out;
}

bool Word::operator==(const Word& other) const {
  return (spec_ == other.spec_ || *spec_ == *other.spec_) && letters_ == other.letters_;
}

bool Word::operator<(const Word& other) const {
  return std::lexicographical_compare(
      letters_.begin(), letters_.end(), other.letters_.begin(), other.letters_.end(),
      [](const Letter& a, const Letter& b) {
        return a.factor != b.factor ? a.factor < b.factor : a.exponent < b.exponent;
      });
}

std::vector<Word> ball(const SpecPtr& spec, int radius) {
  std::vector<Word> gens;
  for (std::size_t i = 0; i < spec->size(); ++i) {
    gens.push_back(Word::reduce(spec, {{i, 1}}));
    if (spec->orders[i] != 2) gens.push_back(Word::reduce(spec, {{i, -1}}));
  }
  std::set<Word> seen{Word(spec)};
  std::vector<Word> frontier{Word(spec)};
  for (int r = 0; r < radius; ++r) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (const auto& g : gens) {
        Word x = w * g;
        if (seen.insert(x).second) next.push_back(std::move(x));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

Word GroupEmbedding::apply(const Word& w) const {
  if (!(*w.spec() == *source)) throw UsageError("embedding " + name + ": word is not over the source group");
  std::vector<Letter> raw;
  for (const auto& l : w.letters()) {
    const Word img = images.at(l.factor).pow(l.exponent);
    raw.insert(raw.end(), img.letters().begin(), img.letters().end());
  }
  return Word::reduce(target, raw);
}

CheckList GroupEmbedding::relator_checks() const {
  CheckList out;
  for (std::size_t i = 0; i < source->size(); ++i) {
    const int m = source->orders[i];
    if (m == kInfiniteOrder) continue;
    const Word r = images[i].pow(m);
    out.add(name + ": image of " + source->names[i] + "^" + std::to_string(m), "relator",
            static_cast<double>(r.syllables()), 0.0);
  }
  return out;
}

Word embed(const Word& w, const GroupEmbedding& e) { return e.apply(w); }

GroupEmbedding embedding_iii() {
  GroupEmbedding e{"iii", spec_z2_z2_z(), spec_star_z2(4), {}};
  e.images = {Word::parse(e.target, "s0"), Word::parse(e.target, "s1"), Word::parse(e.target, "s2 s3")};
  return e;
}

GroupEmbedding embedding_iv() {
  GroupEmbedding e{"iv", spec_z2_z2_z(), spec_star_z2(3), {}};
  e.images = {Word::parse(e.target, "s0"), Word::parse(e.target, "s1"), Word::parse(e.target, "s2 s0 s1 s2")};
  return e;
}

GroupEmbedding embedding_v() {
  GroupEmbedding e{"v", spec_free3(), spec_z3_z3(), {}};
  e.images = {Word::parse(e.target, "a b a"), Word::parse(e.target, "b a b"), Word::parse(e.target, "a b2 a2 b")};
  return e;
}

GroupEmbedding embedding_by_name(std::string_view name) {
  if (name == "iii") return embedding_iii();
  if (name == "iv") return embedding_iv();
  if (name == "v") return embedding_v();
  throw UsageError("unknown embedding '" + std::string(name) + "' (expected iii, iv or v)");
}

CrossedWord::CrossedWord(int d_, Word b, int tj, int tk, cplx c)
    : d(d_), base(std::move(b)), tail_j(mod(tj, d_)), tail_k(mod(tk, d_)), coefficient(c) {
  if (!(*base.spec() == *spec_free_d2(d)))
    throw UsageError("CrossedWord: base must be a word in the generators g_{lm} of F_{d²}");
}

CrossedWord CrossedWord::from_letters(int d, const std::vector<PauliLetter>& letters, int tj, int tk, cplx c) {
  auto spec = spec_free_d2(d);
  std::vector<Letter> raw;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const auto& l = letters[i];
    if (l.exponent == 0) throw UsageError("CrossedWord: zero exponent");
    const auto f = static_cast<std::size_t>(mod(l.j, d) * d + mod(l.k, d));
    if (!raw.empty() && raw.back().factor == f)
      throw UsageError("CrossedWord: neighbouring letters share generator g" + std::to_string(mod(l.j, d)) +
                       std::to_string(mod(l.k, d)));
    raw.push_back({f, l.exponent});
  }
  return CrossedWord(d, Word::reduce(spec, raw), tj, tk, c);
}

PauliWord CrossedWord::pauli_word() const {
  PauliWord w;
  w.d = d;
  for (const auto& l : base.letters())
    w.letters.push_back({static_cast<int>(l.factor) / d, static_cast<int>(l.factor) % d, l.exponent});
  w.tail_j = tail_j;
  w.tail_k = tail_k;
  return w;
}

cplx crossed_trace(const CrossedWord& x) {
  return (x.base.is_identity() && x.tail_j == 0 && x.tail_k == 0) ? x.coefficient : cplx(0.0);
}

cplx crossed_trace(const std::vector<CrossedWord>& sum) {
  cplx acc = 0.0;
  for (const auto& x : sum) acc += crossed_trace(x);
  return acc;
}

Sigma2WordImage sigma2_word_image(const CrossedWord& x) {
  Sigma2WordImage img;
  if (x.base.is_identity()) {
    img.lambda = 1.0;
    img.labels = {PauliLabel::plain(x.d, x.tail_j, x.tail_k)};
    img.trivial_base = true;
    img.trace = (x.tail_j == 0 && x.tail_k == 0) ? x.coefficient : cplx(0.0);
    return img;
  }
  const auto pw = x.pauli_word();
  img.lambda = word_lambda(pw);
  img.labels = collapsed_labels(pw);
  for (const auto& l : pw.letters) img.exponents.push_back(l.exponent);
  img.trivial_base = false;
  img.trace = 0.0;
  return img;
}

CMatrix sigma2_word_matrix(const BrownRep& brown, const CrossedWord& x) {
  if (brown.d() != x.d) throw UsageError("sigma2_word_matrix: modulus mismatch");
  const CMatrix u = brown.fundamental();
  const CMatrix id = identity(brown.n());
  CMatrix out = identity(static_cast<std::size_t>(x.d) * brown.n());
  for (const auto& l : x.pauli_word().letters) {
    const CMatrix t = tensor(t_op(x.d, l.j, l.k), id);
    out = out * t.adjoint() * unitary_power(u, l.exponent) * t;
  }
  return out * tensor(t_op(x.d, x.tail_j, x.tail_k), id);
}

CMatrix collapsed_word_matrix(const BrownRep& brown, const Sigma2WordImage& img) {
  const int d = brown.d();
  const CMatrix u = brown.fundamental();
  const CMatrix id = identity(brown.n());
  const auto n = img.exponents.size();
  if (img.labels.size() != n + 1) throw UsageError("collapsed_word_matrix: malformed image");
  CMatrix out = img.lambda * identity(static_cast<std::size_t>(d) * brown.n());
  for (std::size_t a = 0; a < n; ++a) {
    out = out * tensor(t_op(img.labels[a]), id).adjoint() * unitary_power(u, img.exponents[a]);
  }
  return out * tensor(t_op(img.labels[n]), id);
}

}  // namespace telecode
