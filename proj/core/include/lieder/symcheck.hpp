#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "lieder/lie.hpp"
#include "lieder/linear_solve.hpp"
#include "lieder/report.hpp"
#include "lieder/star_polynomial.hpp"

namespace lieder {

/// Allocates generic elements of K_n over one growing set of paired
/// indeterminates. Entry (i,j), i < j, of generic `a` is a_i_j, entry (j,i)
/// is -a_i_j'; the diagonal is I*a_i with a_i star-fixed, or a_i - a_i' with
/// the general diagonal.
class GenericFamily {
 public:
  explicit GenericFamily(std::size_t n, bool general_diagonal = false);

  std::size_t n() const { return n_; }
  bool general_diagonal() const { return general_; }
  const Ring& ring() const { return ring_; }
  const VariableInvolution& vars() const { return *vars_; }

  /// Fresh generic element; with `support`, entries outside the block
  /// spanned by the listed indices are zero. Throws ConfigError on a reused
  /// name.
  SkewMatrix generic(const std::string& name, const std::set<std::size_t>* support = nullptr);
  /// Gaussian-rational matrix carried into the polynomial ring.
  Matrix embed(const Matrix& gauss_matrix) const;
  SkewMatrix embed(const SkewMatrix& gauss_matrix) const;
  RingElement scalar(const GaussianRational& c) const { return ring_.constant(c); }

 private:
  std::size_t n_;
  bool general_;
  std::shared_ptr<VariableInvolution> vars_;
  Ring ring_;
  std::set<std::string> names_;
};

struct HypothesisComponent {
  std::string id;
  StarPolynomial poly;
};

/// Entry (r,c) of lhs - rhs becomes component "<label>[r,c]", all n^2 of
/// them. Throws NonLinearHypothesis on degree above one or constant terms.
std::vector<HypothesisComponent> hypothesis_components(const std::string& label, const Matrix& lhs,
                                                       const Matrix& rhs);

struct CertificateTerm {
  std::string hyp_id;
  GaussianRational coeff;
};

struct Certification {
  bool implied = false;
  /// conclusion == sum coeff * hypothesis, re-expanded and checked.
  std::vector<CertificateTerm> combination;
  /// Counterexample when not implied: nonzero variable values; every
  /// hypothesis vanishes there and the conclusion does not.
  std::map<std::string, GaussianRational> assignment;
  /// z* takes the conjugate of z at the assignment.
  bool assignment_real = false;
  GaussianRational conclusion_value;

  nlohmann::json to_json(const StarPolynomial& conclusion) const;
};

/// Linear-span membership of homogeneous linear polynomials over the
/// Gaussian rationals. The elimination is done once; conclusions are
/// certified against it one by one.
class Certifier {
 public:
  explicit Certifier(std::vector<HypothesisComponent> hypotheses);

  std::size_t rank() const { return echelon_.rank(); }
  const std::vector<HypothesisComponent>& hypotheses() const { return hyps_; }
  /// Throws NonLinearHypothesis for a nonlinear or affine conclusion.
  Certification certify(const StarPolynomial& conclusion) const;

 private:
  std::vector<HypothesisComponent> hyps_;
  std::vector<SparseVector<GaussianRational>> rows_;
  Echelon<GaussianRational> echelon_;
  std::shared_ptr<const VariableInvolution> vars_;
};

Certification certify(const StarPolynomial& conclusion, const std::vector<HypothesisComponent>& hypotheses);

struct SymcheckOptions {
  /// Free paired diagonal variables instead of I*w.
  bool general_diagonal = false;
};

/// Identifiers accepted by certify_lemma.
const std::vector<std::string>& known_lemmas();

/// Builds the hypotheses and conclusions of the identity and certifies each
/// conclusion component. Empty `indices` sweeps every valid index choice.
/// One record per index choice, payload {lemma, n, indices, components};
/// probe records pass when their deliberately unsupported conclusion comes
/// back with a verified real counterexample.
/// Throws UnknownLemma, NeedThreeIndices, IndexOutOfRange, EqualIndices.
VerificationReport certify_lemma(std::string_view lemma_id, std::size_t n, const std::vector<std::size_t>& indices = {},
                                 const SymcheckOptions& options = {});

}  // namespace lieder
