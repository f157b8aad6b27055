#pragma once

// Finite models of the Weil group of a local field: a Galois quotient G with
// inertia I and Frobenius coset phi*I, its level-M Weil quotients
// W_M = {(g, m mod M) : g in phi^m I}, and field descriptors (subgroups of W_M).

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "weilrep/group.hpp"

namespace weilrep {

class LocalGaloisQuotient;
using QuotientPtr = std::shared_ptr<const LocalGaloisQuotient>;

struct QuotientReport {
    bool ok = true;
    std::vector<std::string> violations;
};

class LocalGaloisQuotient {
public:
    struct Options {
        long modulus = 0;          // 0 selects f * exponent(G)
        bool tame_check = false;   // phi g phi^-1 = g^q on I
        std::vector<NamedRep> irreps;  // required for non-abelian G
        std::string name;
    };

    /// Throws DomainError when the data fail validate_quotient.
    static QuotientPtr make(GroupPtr group, Subgroup inertia, int phi, long q, Options options);
    static QuotientPtr make(GroupPtr group, Subgroup inertia, int phi, long q) { return make(std::move(group), std::move(inertia), phi, q, Options{}); }

    const GroupPtr& group() const noexcept { return group_; }
    const Subgroup& inertia() const noexcept { return inertia_; }
    int phi() const noexcept { return phi_; }
    long q() const noexcept { return q_; }
    long modulus() const noexcept { return modulus_; }
    bool tame_check() const noexcept { return tame_check_; }
    const std::string& name() const noexcept { return name_; }
    int e() const noexcept { return inertia_.order(); }
    int f() const noexcept { return group_->order() / inertia_.order(); }
    /// m mod f with g in phi^m I.
    int degree_of(int g) const { return degree_[g]; }
    /// Complete list of irreducible representations of G.
    const std::vector<NamedRep>& irreps() const noexcept { return irreps_; }
    int irrep_index(const std::string& name) const;

private:
    LocalGaloisQuotient() = default;

    GroupPtr group_;
    Subgroup inertia_{FiniteGroup::trivial(), {0}};
    int phi_ = 0;
    long q_ = 0;
    long modulus_ = 1;
    bool tame_check_ = false;
    std::string name_;
    std::vector<int> degree_;
    std::vector<NamedRep> irreps_;
};

/// Checks normality of I, cyclicity of G/I generated by phi, the optional tame
/// relation, q >= 2, and that the modulus is a positive multiple of f.
QuotientReport validate_quotient(const GroupPtr& group, const Subgroup& inertia, int phi, long q, long modulus,
                                 bool tame_check);

/// An element of the Weil group model: g in G and an integer degree m with
/// g in phi^m I.
struct WeilElement {
    int g = 0;
    long m = 0;
    bool operator==(const WeilElement&) const = default;
};

/// A subgroup H of W_M.  Elements are kept as sorted (m mod M, g) pairs.
class FieldDescriptor {
public:
    /// Closure of the generators inside W_M.  Throws DomainError when a
    /// generator is incompatible with the quotient or M is not a multiple of f.
    static FieldDescriptor generated(QuotientPtr quotient, long modulus, const std::vector<WeilElement>& generators);
    /// The base field: all of W_M.
    static FieldDescriptor base(QuotientPtr quotient, long modulus = 0);
    /// The subgroup {(e, m) : f | m}: trivial inertia and residue degree f.
    static FieldDescriptor unramified_top(QuotientPtr quotient, long modulus = 0);

    const QuotientPtr& quotient() const noexcept { return quotient_; }
    long modulus() const noexcept { return modulus_; }
    const std::vector<std::pair<long, int>>& elements() const noexcept { return elements_; }
    int order() const noexcept { return static_cast<int>(elements_.size()); }
    bool contains(int g, long m) const;

    /// Residue degree over the base: least positive degree attained.
    long f() const noexcept { return f_; }
    /// Inertia part {g : (g, 0) in H}, sorted.
    const std::vector<int>& inertia() const noexcept { return inertia_; }
    int e() const noexcept { return static_cast<int>(inertia_.size()); }
    /// Least-index element of degree f(), with integer degree f().
    WeilElement frob() const noexcept { return frob_; }
    /// All elements of degree f(), with integer degree f().
    std::vector<WeilElement> frobenius_candidates() const;

    /// Same subgroup at the least modulus M0 (the least m > 0 with (e, m) in H).
    FieldDescriptor canonical() const;
    /// Preimage at a multiple of the current modulus.
    FieldDescriptor lift(long modulus) const;
    /// Equality of the corresponding fields (compared at a common modulus).
    bool same_field(const FieldDescriptor& other) const;
    bool is_subfield_of(const FieldDescriptor& other) const;

    /// A small generating set, chosen greedily in element order.
    std::vector<WeilElement> generators() const;
    /// `desc(M; (word, m), ...)` using canonical generators.
    std::string str() const;

private:
    FieldDescriptor() = default;
    void derive();

    QuotientPtr quotient_;
    long modulus_ = 1;
    std::vector<std::pair<long, int>> elements_;
    long f_ = 1;
    std::vector<int> inertia_;
    WeilElement frob_;
};

/// Every subgroup of W_M, as joins of cyclic subgroups; ordered by (order, elements).
std::vector<FieldDescriptor> all_descriptors(const QuotientPtr& quotient, long modulus = 0);

}  // namespace weilrep
