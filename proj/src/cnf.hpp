#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace musen {

// A disjunction of literals over variables 1..num_vars of the owning set.
// Positive literal v asserts variable v, negative literal -v its negation.
struct Clause {
  std::vector<int> literals;

  Clause() = default;
  explicit Clause(std::vector<int> lits) : literals(std::move(lits)) {}
  bool empty() const { return literals.empty(); }
  std::size_t size() const { return literals.size(); }
};

// An ordered collection of CNF clauses c_1..c_n over variables 1..num_vars.
// Clause order is stable; it defines the 1-based constraint indices used by
// every other component. Duplicate clauses are distinct constraints.
class ConstraintSet {
 public:
  ConstraintSet() = default;
  ConstraintSet(int num_vars, std::vector<Clause> clauses);

  int num_vars() const { return num_vars_; }
  int size() const { return static_cast<int>(clauses_.size()); }
  // 1-based access, ci in 1..size().
  const Clause& clause(int ci) const { return clauses_.at(ci - 1); }
  const std::vector<Clause>& clauses() const { return clauses_; }

 private:
  int num_vars_ = 0;
  std::vector<Clause> clauses_;
};

// A subset of the constraints of a ConstraintSet, stored as a bitvector of
// fixed universe size n. Constraint c_i occupies bit i-1, so the bit-string
// form reads c_1 first ("1010" over n=4 is {c_1, c_3}).
class Node {
 public:
  Node() = default;
  explicit Node(int n) : n_(n), words_((n + 63) / 64, 0) {}

  static Node full_set(int n);
  // Parses "1010"-style strings; index 0 of the string is constraint 1.
  static Node from_bits(std::string_view bits);

  int universe_size() const { return n_; }
  bool contains(int ci) const {
    return (words_[(ci - 1) >> 6] >> ((ci - 1) & 63)) & 1u;
  }
  void insert(int ci) { words_[(ci - 1) >> 6] |= uint64_t{1} << ((ci - 1) & 63); }
  void erase(int ci) { words_[(ci - 1) >> 6] &= ~(uint64_t{1} << ((ci - 1) & 63)); }

  int count() const;
  bool empty() const { return count() == 0; }
  bool subset_of(const Node& other) const;
  Node complement() const;
  Node with(int ci) const { Node r = *this; r.insert(ci); return r; }
  Node without(int ci) const { Node r = *this; r.erase(ci); return r; }

  // Member constraint indices in ascending order.
  std::vector<int> members() const;
  std::string to_bits() const;

  bool operator==(const Node& other) const {
    return n_ == other.n_ && words_ == other.words_;
  }
  bool operator!=(const Node& other) const { return !(*this == other); }
  // Lexicographic order on the bit-string form (c_1 most significant).
  bool operator<(const Node& other) const;

  std::size_t hash() const;

 private:
  int n_ = 0;
  std::vector<uint64_t> words_;
};

struct NodeHash {
  std::size_t operator()(const Node& node) const { return node.hash(); }
};

using NodeSet = std::unordered_set<Node, NodeHash>;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParsedCnf {
  ConstraintSet set;
  // True when the actual clause count differs from the header's declaration;
  // the parsed clauses are kept either way.
  bool header_mismatch = false;
};

// Parses DIMACS CNF text. Comment lines start with 'c'; the "p cnf V C"
// header is required. Literals referring to variables above V, malformed
// tokens, and (unless allowed explicitly) empty clauses raise ParseError.
ParsedCnf parse_dimacs(std::istream& in, bool allow_empty_clause = false);
ParsedCnf parse_dimacs(const std::string& text, bool allow_empty_clause = false);

// Serializes back to DIMACS; parse_dimacs(write_dimacs(s)) reproduces s
// exactly for well-formed sets.
std::string write_dimacs(const ConstraintSet& cs);

// Deterministic random CNF: n_clauses clauses whose widths are uniform in
// 1..width, each over distinct variables (hence no complementary pair) with
// uniform signs. Identical arguments give identical output.
ConstraintSet random_cnf(int n_vars, int n_clauses, int width, uint64_t seed);

}  // namespace musen
