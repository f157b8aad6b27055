#pragma once

// Recovering a Weil representation from its local polynomials.
//
// The driver queries the descriptor with trivial inertia and residue degree
// f to split the Frobenius eigenvalues into mu-classes, untwists each class
// to an Artin representation of some W_M', and recovers that character one
// cyclic subgroup at a time through descent fields.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "weilrep/oracle.hpp"

namespace weilrep {

struct QueryRecord {
    FieldDescriptor field;
    EulerFactor answer;
};

struct DescentRecord {
    FieldDescriptor cyclic;  // C, a cyclic subgroup of some W_M'
    FieldDescriptor descent;  // L
};

struct ReconstructionResult {
    WeilRep rep;
    std::vector<QueryRecord> query_log;
    std::vector<DescentRecord> descents;
};

struct DescentCheck {
    long index = 0;           // [C~ : L], C~ the preimage of C at L's modulus
    long expected_index = 0;  // e of C
    long f_L = 0;
    long expected_f = 0;      // f of C
    bool image_is_C = false;
    bool inertia_trivial = false;
    bool ok() const { return index == expected_index && f_L == expected_f && image_is_C && inertia_trivial; }
    std::string str() const;
};

/// For a cyclic descriptor C at modulus M', the field L cut out by chi * phi
/// inside the preimage of C: totally ramified over C's field of degree e_C,
/// with L . F / L unramified of degree |C|.  Built prime by prime and
/// intersected.  target_modulus 0 picks lcm(M', |C| f_C); otherwise it must
/// be a multiple of that (ConfigurationError).
FieldDescriptor descent_descriptor(const FieldDescriptor& cyclic, long target_modulus = 0);
/// The descent field for the whole extension when G is cyclic, at the given
/// modulus (default: the quotient's).
FieldDescriptor descent_descriptor(const QuotientPtr& quotient, long modulus = 0);
DescentCheck check_descent(const FieldDescriptor& cyclic, const FieldDescriptor& descent);

/// Character values on the elements of a cyclic descriptor (in its element
/// order), read off the oracle's roots over the descent field.  The roots must
/// be roots of unity.
std::vector<Cyclotomic> reconstruct_cyclic(const EulerOracle& oracle, const FieldDescriptor& cyclic,
                                           std::vector<DescentRecord>* descents = nullptr);
/// G cyclic and the oracle an Artin representation of G.
ClassFunction reconstruct_cyclic(const EulerOracle& oracle, const QuotientPtr& quotient);

/// Character of an Artin representation of W_level, in
/// FieldDescriptor::base(Q, level) element order.
std::vector<Cyclotomic> reconstruct_artin_level(const EulerOracle& oracle, const QuotientPtr& quotient, long level,
                                                std::vector<DescentRecord>* descents = nullptr);
/// Character of an Artin representation of G.
ClassFunction reconstruct_artin(const EulerOracle& oracle, const QuotientPtr& quotient);

struct MuClass {
    Cyclotomic representative;  // least encoding in the class
    std::vector<Cyclotomic> roots;
};
/// Partition by mu_class_equal; classes in order of first appearance.
std::vector<MuClass> split_by_mu_class(const InverseRootMultiset& roots);

/// Inverse roots of an answer: the certified ones, else the quadratic formula
/// (degree <= 2), else the candidates found by exact division plus a
/// square-free part of degree <= 2.  UnsupportedError when incomplete and
/// `complete` is set.
InverseRootMultiset certify_roots(const EulerFactor& answer, const std::vector<Cyclotomic>& candidates = {},
                                  bool complete = true);

/// The oracle of rho (x) psi: inverse roots over F scaled by psi(Frob_F)^-1.
/// With finite_only, roots that are not roots of unity after scaling are
/// dropped, and uncertified answers are certified by trying every
/// root_order-th root of unity (when root_order > 0).
class TwistedOracle : public EulerOracle {
public:
    TwistedOracle(const EulerOracle& inner, Twist psi, bool finite_only = false, long root_order = 0);
    EulerFactor query(const FieldDescriptor& field) const override;
    const QuotientPtr& quotient() const override { return inner_.quotient(); }

private:
    const EulerOracle& inner_;
    Twist psi_;
    bool finite_only_;
    long root_order_;
};

struct ReconstructOptions {
    /// Receives one line per query and per reconstructed class.
    std::function<void(const std::string&)> trace;
};

/// Throws VerificationError naming the descriptor when a logged query does
/// not replay against the result.
ReconstructionResult reconstruct(const EulerOracle& oracle, const QuotientPtr& quotient,
                                 const ReconstructOptions& options = {});

/// euler_factor(rep, d) == oracle(d) for every d.
bool verify_reconstruction(const WeilRep& rep, const EulerOracle& oracle, const std::vector<FieldDescriptor>& fields);

/// Random representations of dimension <= 4 over the corpus quotients,
/// reproducible from the seed.
std::vector<WeilRep> generate_corpus(std::uint64_t seed, int count);

}  // namespace weilrep
