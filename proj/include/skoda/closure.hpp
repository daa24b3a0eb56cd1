#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "skoda/ideal_ops.hpp"

namespace skoda {

enum class ClosureStatus { Member, NonMemberCertified, UndecidedAtCap };

enum class CertificateKind {
  None,
  Power,      // h^s in (J^m)^s
  Reduction,  // J^m (J^m, h)^N = (J^m, h)^(N+1)
  Newton,     // exponent of h dominates a convex combination of exponents of J^m
};

struct ClosureVerdict;

struct ClosureCertificate {
  CertificateKind kind = CertificateKind::None;
  unsigned s = 0;
  unsigned N = 0;
  std::vector<Coeff> newton_weights;  // over the minimal generators of J^m
  /// When nonempty the power or reduction data refers to K = (via) in place of
  /// J, and via_verdicts[i] certifies via[i] in the closure of J.
  std::vector<Poly> via;
  std::vector<ClosureVerdict> via_verdicts;
};

struct ClosureVerdict {
  ClosureStatus status = ClosureStatus::UndecidedAtCap;
  ClosureCertificate certificate;
  /// Largest s or N tried when undecided.
  unsigned bound = 0;
  bool member() const { return status == ClosureStatus::Member; }
};

struct ClosureCaps {
  unsigned reduction_N = 6;
  unsigned power_s = 8;
};

/// Member(s) iff h^s lies in J^{m s}; UndecidedAtCap otherwise.
ClosureVerdict power_certificate(const Poly& h, const Ideal& J, unsigned m, unsigned s);
/// Smallest s <= s_max with a power certificate.
ClosureVerdict search_power_certificate(const Poly& h, const Ideal& J, unsigned m, unsigned s_max);
/// First N <= cap with J^m (J^m, h)^N = (J^m, h)^(N+1). Never certifies non-membership.
ClosureVerdict reduction_member(const Poly& h, const Ideal& J, unsigned m, unsigned cap);
/// Exact answer for a monomial h and a monomial J in a polynomial ring.
ClosureVerdict newton_verdict(const Poly& h, const Ideal& J, unsigned m);

/// h in the closure of K^m by a power certificate, with K contained in the
/// closure of J (each generator certified by closure_member at m = 1); then h
/// lies in the closure of J^m.
ClosureVerdict power_certificate_via(const Poly& h, const Ideal& J, const Ideal& K, unsigned m, unsigned s,
                                     const ClosureCaps& caps);

/// Re-checks the certificate of a Member verdict from scratch.
bool recheck(const ClosureVerdict& v, const Poly& h, const Ideal& J, unsigned m);

/// Power search, then the reduction criterion; in the monomial regime the
/// Newton oracle settles everything the searches leave open.
ClosureVerdict closure_member(const Poly& h, const Ideal& J, unsigned m, const ClosureCaps& caps = {});

/// True when J is generated by monomials of a polynomial ring.
bool is_monomial_ideal(const Ideal& J);

struct CertifiedGenerator {
  Poly g;
  ClosureVerdict verdict;
};

struct ClosureGenerators {
  std::vector<CertifiedGenerator> accepted;
  std::vector<Poly> rejected;
};

/// Minimal generators of the closure of J^m for monomial J, each certified.
ClosureGenerators closure_generators(const Ideal& J, unsigned m, const ClosureCaps& caps = {});
/// Validates user-supplied candidates; those without a certificate are rejected.
ClosureGenerators closure_generators(const Ideal& J, unsigned m, const std::vector<Poly>& candidates,
                                     const ClosureCaps& caps = {});

std::string to_string(ClosureStatus s);
std::string to_string(CertificateKind k);
nlohmann::json to_json(const ClosureVerdict& v);

}  // namespace skoda
