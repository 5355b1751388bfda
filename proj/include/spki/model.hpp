#ifndef SPKI_MODEL_HPP
#define SPKI_MODEL_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

// Core value types of the SPKI/SDSI calculus: principals, validity
// intervals, action expressions, certificates, tuples and formulas.
// Everything here is an immutable value; all operations are pure.

namespace spki {

using Time = std::uint64_t;

// Distinguished upper bound for validity intervals. Never a lower bound.
inline constexpr Time time_infinity = std::numeric_limits<Time>::max();

// Keys and local names share one token alphabet; disjointness is lexical.
// A key token starts with "k-", every other token is a local name.
bool is_token(std::string_view text);
bool is_key_token(std::string_view text);

struct Key {
  std::string id;

  explicit Key(std::string token);
  friend std::strong_ordering operator<=>(const Key&, const Key&) = default;
};

struct LocalName {
  std::string id;

  explicit LocalName(std::string token);
  friend std::strong_ordering operator<=>(const LocalName&,
                                          const LocalName&) = default;
};

// A principal expression: a key, a local name, or a dotted compound.
// Name combination is associative, so expressions are stored in
// right-associated canonical form, i.e. as their leaf sequence. SPKI
// surface names (flat lists) map onto this directly.
class PrincipalExpr {
 public:
  explicit PrincipalExpr(Key k);
  explicit PrincipalExpr(LocalName n);

  static PrincipalExpr dot(const PrincipalExpr& head,
                           const PrincipalExpr& tail);

  std::size_t leaf_count() const { return leaves_.size(); }
  const std::string& leaf(std::size_t i) const { return leaves_[i]; }
  bool leaf_is_key(std::size_t i) const;
  const std::vector<std::string>& leaves() const { return leaves_; }

  bool is_single_key() const;
  bool is_single_name() const;
  bool is_dot() const { return leaves_.size() >= 2; }

  // Right-associated view: head is the first leaf, tail the rest.
  PrincipalExpr head() const;
  PrincipalExpr tail() const;

  Key leading_key() const;  // requires leaf 0 to be a key

  PrincipalExpr prefix(std::size_t n) const;  // first n leaves, n >= 1
  PrincipalExpr suffix(std::size_t i) const;  // leaves from i on, i < size

  friend std::strong_ordering operator<=>(const PrincipalExpr&,
                                          const PrincipalExpr&) = default;

 private:
  PrincipalExpr() = default;
  std::vector<std::string> leaves_;
};

// Returns the right-associated canonical form. Since expressions are
// stored as leaf sequences this is the identity; it exists so callers
// can state intent when an expression arrives from foreign shapes.
PrincipalExpr normalize_principal(const PrincipalExpr& p);

// True iff the leftmost leaf is a key and all other leaves are names.
bool is_fully_qualified(const PrincipalExpr& p);

// A validity interval: empty, or [lo, hi] with lo <= hi and hi possibly
// infinite. Empty is a distinct value, never encoded as lo > hi.
class ValidityInterval {
 public:
  static ValidityInterval empty();
  static ValidityInterval range(Time lo, Time hi);
  static ValidityInterval always() { return range(0, time_infinity); }
  static ValidityInterval point(Time t) { return range(t, t); }

  bool is_empty() const { return empty_; }
  Time lo() const;
  Time hi() const;

  bool contains(Time t) const;
  bool contains(const ValidityInterval& other) const;  // superset test
  bool is_point() const { return !empty_ && lo_ == hi_; }

  friend std::strong_ordering operator<=>(const ValidityInterval& a,
                                          const ValidityInterval& b);
  friend bool operator==(const ValidityInterval& a,
                         const ValidityInterval& b);

 private:
  ValidityInterval(bool empty, Time lo, Time hi)
      : empty_(empty), lo_(lo), hi_(hi) {}
  bool empty_ = true;
  Time lo_ = 0;
  Time hi_ = 0;
};

// A concrete action: a nonempty path of token strings.
using ActionLiteral = std::vector<std::string>;

// One atom of an action expression. A plain atom denotes exactly its
// path; a prefix atom denotes every literal whose path extends it, the
// final element matching as a string prefix. Atom denotations are
// pairwise nested or disjoint, which keeps the set algebra atom-local.
struct ActionAtom {
  std::vector<std::string> path;  // nonempty tokens
  bool prefix = false;

  static ActionAtom literal(std::vector<std::string> path);
  static ActionAtom prefix_pattern(std::vector<std::string> path);

  bool matches(std::span<const std::string> literal) const;
  bool covers(const ActionAtom& other) const;  // denotation superset
  std::optional<ActionAtom> intersect(const ActionAtom& other) const;

  friend std::strong_ordering operator<=>(const ActionAtom&,
                                          const ActionAtom&) = default;
};

// A finite set of atoms, kept sorted and deduplicated. The denotation
// aint(A) is the union of the atom denotations.
class ActionExpr {
 public:
  ActionExpr() = default;
  explicit ActionExpr(std::vector<ActionAtom> atoms);

  static ActionExpr of_literals(std::vector<ActionLiteral> literals);

  const std::vector<ActionAtom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  bool contains_literal(std::span<const std::string> literal) const;

  ActionExpr unite(const ActionExpr& other) const;  // atom-set union

  friend std::strong_ordering operator<=>(const ActionExpr&,
                                          const ActionExpr&) = default;

 private:
  std::vector<ActionAtom> atoms_;
};

class Certificate;

struct NamingCert {
  Key issuer;
  LocalName name;
  PrincipalExpr subject;  // fully qualified
  ValidityInterval validity;
  std::optional<Key> revoker;
};

struct AuthCert {
  Key issuer;
  PrincipalExpr subject;  // fully qualified
  bool delegate = false;
  ActionExpr action;
  ValidityInterval validity;
  std::optional<Key> revoker;
};

struct CrlCert {
  Key issuer;
  std::vector<Certificate> canceled;  // naming/auth, revocable by issuer
  ValidityInterval validity;
};

class Certificate {
 public:
  enum class Kind { naming, auth, crl };

  Certificate(NamingCert c);  // NOLINT: implicit by design
  Certificate(AuthCert c);
  Certificate(CrlCert c);

  Kind kind() const;
  bool is_naming() const { return kind() == Kind::naming; }
  bool is_auth() const { return kind() == Kind::auth; }
  bool is_crl() const { return kind() == Kind::crl; }

  const NamingCert& naming() const;
  const AuthCert& auth() const;
  const CrlCert& crl() const;

  const Key& issuer() const;
  const ValidityInterval& validity() const;
  const std::optional<Key>& revoker() const;  // nullopt for CRLs
  bool revocable() const;

  friend std::strong_ordering operator<=>(const Certificate& a,
                                          const Certificate& b);
  friend bool operator==(const Certificate& a, const Certificate& b);

 private:
  std::variant<NamingCert, AuthCert, CrlCert> v_;
};

std::strong_ordering compare(const Certificate& a, const Certificate& b);

struct Bind3 {
  PrincipalExpr lhs;  // fully qualified
  PrincipalExpr rhs;  // fully qualified
  ValidityInterval validity;
};

struct Name4 {
  Key issuer;
  LocalName name;
  PrincipalExpr subject;
  ValidityInterval validity;
};

struct Auth5 {
  Key issuer;
  PrincipalExpr subject;
  bool delegate = false;
  ActionExpr action;
  ValidityInterval validity;
};

// The reduction engine's working object: a 3-, 4- or 5-tuple.
class Tuple {
 public:
  enum class Kind { bind3, name4, auth5 };

  Tuple(Bind3 t);  // NOLINT: implicit by design
  Tuple(Name4 t);
  Tuple(Auth5 t);

  Kind kind() const;
  bool is_bind3() const { return kind() == Kind::bind3; }
  bool is_name4() const { return kind() == Kind::name4; }
  bool is_auth5() const { return kind() == Kind::auth5; }

  const Bind3& bind3() const;
  const Name4& name4() const;
  const Auth5& auth5() const;

  const ValidityInterval& validity() const;
  Tuple with_validity(const ValidityInterval& v) const;

  friend std::strong_ordering operator<=>(const Tuple& a, const Tuple& b);
  friend bool operator==(const Tuple& a, const Tuple& b);

 private:
  std::variant<Bind3, Name4, Auth5> v_;
};

// Projects a naming or authorization certificate to its tuple, dropping
// the revoker field. Rejects CRLs.
Tuple tuple_of_cert(const Certificate& c);

// t1 subsumes t2: same issuer/name/subject with at least as strong
// validity (and, for 5-tuples, action set and delegation bit). A tuple
// with delegate set is strictly stronger than one without.
bool subsumes(const Tuple& t1, const Tuple& t2);

// Formulas of the authorization logic. Implication f -> g is encoded as
// not(and(f, not(g))); no other connectives exist.
class Formula {
 public:
  enum class Kind { bound, issued, valid, perm, del, now_in, lnot, land };

  static Formula bound(PrincipalExpr p, PrincipalExpr q);
  static Formula issued(Certificate c);
  static Formula valid(Certificate c);
  static Formula perm(Key k, PrincipalExpr p, ActionExpr a);
  static Formula del(Key k, PrincipalExpr p, ActionExpr a);
  static Formula now_in(ValidityInterval v);
  static Formula lnot(Formula f);
  static Formula land(Formula f, Formula g);
  static Formula implies(Formula f, Formula g);

  Kind kind() const;

  const PrincipalExpr& lhs() const;     // bound
  const PrincipalExpr& rhs() const;     // bound
  const Certificate& cert() const;      // issued / valid
  const Key& key() const;               // perm / del
  const PrincipalExpr& subject() const; // perm / del
  const ActionExpr& action() const;     // perm / del
  const ValidityInterval& interval() const;  // now_in
  const Formula& child() const;         // lnot
  const Formula& left() const;          // land
  const Formula& right() const;         // land

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

// The formula associated with a naming or authorization certificate.
// For an authorization without the delegate bit the Del conjunct is
// omitted entirely. Rejects CRLs.
Formula formula_of_cert(const Certificate& c);

// Identical formula for a reduced tuple (Bound for 3-tuples).
Formula formula_of_tuple(const Tuple& t);

}  // namespace spki

#endif  // SPKI_MODEL_HPP
