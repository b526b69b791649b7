#include "cnf.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <istream>
#include <limits>
#include <random>
#include <sstream>

namespace musen {

namespace {

// Drops repeated literals, keeping first occurrences. Complementary pairs
// (tautologies) are deliberately left alone: removing them would change the
// clause's meaning.
std::vector<int> dedupe_literals(const std::vector<int>& lits) {
  std::vector<int> out;
  out.reserve(lits.size());
  for (int lit : lits) {
    if (std::find(out.begin(), out.end(), lit) == out.end()) out.push_back(lit);
  }
  return out;
}

// Exact uniform draw from {0, ..., bound-1} via rejection sampling, so the
// result depends only on the generator state and not on library internals.
uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound) {
  const uint64_t limit = bound * (UINT64_MAX / bound);
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

ConstraintSet::ConstraintSet(int num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
  if (num_vars < 0) throw std::invalid_argument("negative variable count");
  for (Clause& c : clauses_) {
    for (int lit : c.literals) {
      if (lit == 0 || std::abs(lit) > num_vars_)
        throw std::invalid_argument("literal outside variable range");
    }
    c.literals = dedupe_literals(c.literals);
  }
}

Node Node::full_set(int n) {
  Node r(n);
  for (int ci = 1; ci <= n; ++ci) r.insert(ci);
  return r;
}

Node Node::from_bits(std::string_view bits) {
  Node r(static_cast<int>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      r.insert(static_cast<int>(i) + 1);
    else if (bits[i] != '0')
      throw std::invalid_argument("bit string must contain only 0/1");
  }
  return r;
}

int Node::count() const {
  int c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool Node::subset_of(const Node& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

Node Node::complement() const {
  Node r(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
  if (n_ & 63) r.words_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
  return r;
}

std::vector<int> Node::members() const {
  std::vector<int> out;
  out.reserve(count());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    uint64_t bits = words_[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<int>(w * 64 + b) + 1);
      bits &= bits - 1;
    }
  }
  return out;
}

std::string Node::to_bits() const {
  std::string s(n_, '0');
  for (int ci = 1; ci <= n_; ++ci)
    if (contains(ci)) s[ci - 1] = '1';
  return s;
}

bool Node::operator<(const Node& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const uint64_t diff = words_[i] ^ other.words_[i];
    if (diff) {
      // The lowest differing bit is the earliest constraint index; '0' sorts
      // before '1' there, like the bit-string comparison would.
      const int b = std::countr_zero(diff);
      return ((words_[i] >> b) & 1u) == 0;
    }
  }
  return false;
}

std::size_t Node::hash() const {
  // FNV-1a over the words plus the universe size.
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<uint64_t>(n_));
  for (uint64_t w : words_) mix(w);
  return static_cast<std::size_t>(h);
}

ParsedCnf parse_dimacs(std::istream& in, bool allow_empty_clause) {
  std::string tok;
  bool saw_header = false;
  int num_vars = 0;
  long declared_clauses = 0;
  std::vector<Clause> clauses;
  std::vector<int> current;

  auto parse_int = [](const std::string& s, const char* what) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
      throw ParseError(std::string("malformed ") + what + ": '" + s + "'");
    return v;
  };

  while (in >> tok) {
    if (tok == "c" || tok[0] == 'c') {
      // Comment: discard the rest of the line. A token like "c..." only
      // counts as a comment when it starts the line's first token; DIMACS
      // comments are whole lines, which stream extraction cannot see, so we
      // treat any token starting with 'c' as opening a comment line.
      in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
      continue;
    }
    if (tok == "p") {
      if (saw_header) throw ParseError("duplicate header line");
      std::string fmt, vs, cs;
      if (!(in >> fmt >> vs >> cs) || fmt != "cnf")
        throw ParseError("malformed header; expected 'p cnf V C'");
      const long v = parse_int(vs, "variable count");
      const long c = parse_int(cs, "clause count");
      if (v < 0 || c < 0) throw ParseError("negative counts in header");
      num_vars = static_cast<int>(v);
      declared_clauses = c;
      saw_header = true;
      continue;
    }
    if (!saw_header) throw ParseError("clause data before 'p cnf' header");
    const long lit = parse_int(tok, "literal");
    if (lit == 0) {
      if (current.empty() && !allow_empty_clause)
        throw ParseError("empty clause (not allowed without explicit opt-in)");
      clauses.emplace_back(std::move(current));
      current.clear();
      continue;
    }
    if (std::abs(lit) > num_vars)
      throw ParseError("literal " + std::to_string(lit) +
                       " exceeds declared variable count");
    current.push_back(static_cast<int>(lit));
  }
  if (!saw_header) throw ParseError("missing 'p cnf' header");
  if (!current.empty()) clauses.emplace_back(std::move(current));

  ParsedCnf out;
  out.header_mismatch = declared_clauses != static_cast<long>(clauses.size());
  out.set = ConstraintSet(num_vars, std::move(clauses));
  return out;
}

ParsedCnf parse_dimacs(const std::string& text, bool allow_empty_clause) {
  std::istringstream in(text);
  return parse_dimacs(in, allow_empty_clause);
}

std::string write_dimacs(const ConstraintSet& cs) {
  std::ostringstream out;
  out << "p cnf " << cs.num_vars() << ' ' << cs.size() << '\n';
  for (const Clause& c : cs.clauses()) {
    for (int lit : c.literals) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

ConstraintSet random_cnf(int n_vars, int n_clauses, int width, uint64_t seed) {
  if (n_vars < 1) throw std::invalid_argument("random_cnf: need n_vars >= 1");
  if (n_clauses < 0) throw std::invalid_argument("random_cnf: negative clause count");
  if (width < 1 || width > n_vars)
    throw std::invalid_argument("random_cnf: width must be in 1..n_vars");

  std::mt19937_64 rng(seed);
  std::vector<Clause> clauses;
  clauses.reserve(n_clauses);
  std::vector<int> pool(n_vars);
  for (int i = 0; i < n_vars; ++i) pool[i] = i + 1;

  for (int ci = 0; ci < n_clauses; ++ci) {
    const int w = 1 + static_cast<int>(uniform_below(rng, width));
    // Partial Fisher-Yates: the first w entries become the clause variables,
    // distinct by construction (so no duplicate or complementary literals).
    for (int i = 0; i < w; ++i) {
      const int j = i + static_cast<int>(uniform_below(rng, n_vars - i));
      std::swap(pool[i], pool[j]);
    }
    std::vector<int> lits(w);
    for (int i = 0; i < w; ++i) {
      const bool negate = rng() & 1u;
      lits[i] = negate ? -pool[i] : pool[i];
    }
    clauses.emplace_back(std::move(lits));
  }
  return ConstraintSet(n_vars, std::move(clauses));
}

}  // namespace musen
