#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diracsym/weight.hpp"

namespace diracsym::rootsys {

/// Square integer matrix acting on fundamental-weight coordinates.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}
  static IntMatrix identity(int n);

  int size() const { return n_; }
  int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  int& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  Weight apply(const Weight& w) const;
  long long determinant() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) { return a.a_ <=> b.a_; }

 private:
  int n_ = 0;
  std::vector<int> a_;
};

struct Root {
  Weight weight;                  // doubled fundamental-weight coordinates
  std::vector<int> simpleCoeffs;  // expansion in simple roots
  std::vector<int> corootCoeffs;  // expansion of the coroot in simple coroots
  int height() const;
};

/// Root datum of a (possibly reducible) Cartan type.
///
/// `cartan[i][j]` is <alpha_i, alpha_j^vee>, so row i lists alpha_i in
/// fundamental-weight coordinates. Positive roots are sorted by height with
/// the simple roots first, in label order. The invariant form is normalized
/// so that long roots of every simple factor have squared length 2.
struct CartanDatum {
  std::string label;
  int rank = 0;
  std::vector<std::vector<int>> cartan;
  std::vector<Rational> halfSquaredLength;  // (alpha_i, alpha_i) / 2
  std::vector<Root> positiveRoots;
  std::vector<std::vector<Rational>> omegaGram;  // (omega_i, omega_j)
  std::vector<long long> orderFunctional;        // coefficients of 2 rho^vee

  /// 2<lambda, beta^vee> for weight lambda (doubled coords) and positive root index.
  int pairing(const Weight& lambda, int root) const;
  /// Index and sign (+1/-1) of a root given in doubled coordinates.
  std::optional<std::pair<int, int>> locate(const Weight& doubledRoot) const;
  /// Invariant form (lambda, mu) on doubled coordinates.
  Rational form(const Weight& a, const Weight& b) const;
  /// Value of 2 rho^vee; strictly positive on every positive root.
  long long order(const Weight& w) const;

  std::map<Weight, std::pair<int, int>> rootIndex;
};

/// Builds the Cartan datum for labels A1, A2, A3, B2, C2, G2 or a product
/// such as "A1xB2" (total rank at most 4).
CartanDatum buildCartanDatum(std::string_view label);

struct WeylElem {
  std::vector<int> word;  // reduced word; w = s_{word[0]} ... s_{word[k-1]}
  IntMatrix matrix;
  int length = 0;
  int sign = 1;

  Weight operator()(const Weight& w) const { return matrix.apply(w); }
};

/// All elements of W, identity first, in breadth-first (length) order.
std::vector<WeylElem> weylGroup(const CartanDatum& datum);

/// A Cartan datum together with its enumerated Weyl group.
class RootSystem {
 public:
  explicit RootSystem(CartanDatum datum);

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank; }
  const std::vector<WeylElem>& weyl() const { return weyl_; }
  const WeylElem& elem(int w) const { return weyl_[w]; }
  int order() const { return static_cast<int>(weyl_.size()); }

  int multiply(int a, int b) const { return mult_[static_cast<std::size_t>(a) * weyl_.size() + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int indexOf(const IntMatrix& m) const;
  int simpleReflection(int i) const { return simple_[i]; }
  /// Weyl element of the reflection in positive root `root`.
  int reflection(int root) const { return reflections_[root]; }
  int longest() const { return longest_; }
  Weight apply(int w, const Weight& lambda) const { return weyl_[w].matrix.apply(lambda); }

 private:
  CartanDatum datum_;
  std::vector<WeylElem> weyl_;
  std::map<IntMatrix, int> index_;
  std::vector<int> mult_;
  std::vector<int> inverse_;
  std::vector<int> simple_;
  std::vector<int> reflections_;
  int longest_ = 0;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

RootSystemPtr makeRootSystem(std::string_view label);

/// Mod-2 grading of simple roots; a root is compact iff its grading is 0.
struct RealFormGrading {
  std::vector<int> bits;
  int epsilon(const Root& root) const;
};

/// A root subsystem sharing the ambient Cartan, with the inherited positive system.
struct SubsystemDatum {
  RootSystemPtr system;
  std::vector<int> roots;   // sorted positive-root indices
  std::vector<int> simple;  // positive-root indices of the subsystem's simple roots
  Weight rho;
  int q = 0;                // noncompact positive roots (for the datum's grading)
  std::vector<int> weyl;    // ambient Weyl-element indices, identity first

  bool contains(int root) const;
  bool isDominant(const Weight& lambda) const;
  bool isRegular(const Weight& lambda) const;
  /// Length relative to the subsystem's positive system.
  int length(int w) const;
  int order() const { return static_cast<int>(weyl.size()); }
};

using SubsystemPtr = std::shared_ptr<const SubsystemDatum>;

/// Validates and completes a subsystem given by positive-root indices.
/// The root set must be closed under its own reflections.
SubsystemPtr makeSubsystem(RootSystemPtr system, std::vector<int> roots,
                           const RealFormGrading& grading = {});
SubsystemPtr fullSubsystem(RootSystemPtr system, const RealFormGrading& grading = {});
/// Levi subsystem spanned by the simple roots listed in `levi`.
SubsystemPtr leviSubsystem(RootSystemPtr system, const std::vector<int>& levi,
                           const RealFormGrading& grading = {});
SubsystemPtr intersect(const SubsystemDatum& a, const SubsystemDatum& b,
                       const RealFormGrading& grading = {});

struct GroupDatum {
  RootSystemPtr system;
  RealFormGrading grading;
  Weight rho, rhoC, rhoN;
  int q = 0;   // number of noncompact positive roots = dim p / 2
  int l0 = 0;  // dim a; always 0 for gradings
  SubsystemPtr full, compact, torus;
  std::vector<int> cosetReps;  // W^1 for the compact subsystem

  int rank() const { return system->rank(); }
  std::string label() const { return system->datum().label; }
  bool isCompactRoot(int root) const;
};

GroupDatum buildGroupDatum(std::string_view type, std::vector<int> grading);

/// Elements of W(outer) mapping the outer dominant chamber into the inner one.
std::vector<int> cosetReps(const SubsystemDatum& outer, const SubsystemDatum& inner);

/// Dominant conjugate under the subsystem's Weyl group, with the minimal-length
/// element (an ambient Weyl index) carrying lambda to it.
std::pair<Weight, int> dominantConjugate(const Weight& lambda, const SubsystemDatum& sub);

/// Every grading bit vector of the given rank (each realizes an equal-rank form).
std::vector<std::vector<int>> allGradings(int rank);

}  // namespace diracsym::rootsys
