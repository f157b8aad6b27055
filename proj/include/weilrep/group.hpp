#pragma once

// Finite groups given by permutation generators or a multiplication table,
// with conjugacy classes, subgroups, class functions and matrix
// representations over cyclotomic numbers.

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weilrep/cyclotomic.hpp"
#include "weilrep/matrix.hpp"

namespace weilrep {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Validation of the group axioms is always run; construction fails with
/// DomainError on any violation.
class FiniteGroup {
public:
    /// Permutations are image lists on {0, ..., degree-1}; products compose
    /// right to left, (a*b)(x) = a(b(x)).
    static GroupPtr from_permutations(std::vector<std::string> generator_names,
                                      const std::vector<std::vector<int>>& permutations);
    /// Element 0 must be the identity.  Generators default to a greedy choice.
    static GroupPtr from_table(std::vector<std::vector<int>> table, std::vector<std::string> names = {},
                               std::vector<int> generators = {});
    static GroupPtr cyclic(int n, const std::string& generator = "g");
    static GroupPtr trivial();

    int order() const noexcept { return static_cast<int>(table_.size()); }
    int identity() const noexcept { return 0; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    int pow(int a, long k) const;
    int conjugate(int g, int by) const { return mul(mul(by, g), inv(by)); }
    int element_order(int a) const { return orders_[a]; }
    int exponent() const noexcept { return exponent_; }
    bool is_abelian() const noexcept { return abelian_; }
    bool is_cyclic() const;
    /// Least-index element of maximal order when cyclic; throws otherwise.
    int cyclic_generator() const;

    const std::vector<int>& generators() const noexcept { return generators_; }
    const std::vector<std::string>& generator_names() const noexcept { return generator_names_; }
    const std::string& name(int a) const { return names_[a]; }
    /// Words like `e`, `s^5`, `s*t`, `s^-1*t^2`.
    int parse_element(std::string_view word) const;
    /// Expresses `a` as a word in the generators, as (generator position, exponent) pairs.
    const std::vector<std::pair<int, int>>& word(int a) const { return words_[a]; }

    /// Classes sorted by (element order, least member index).
    const std::vector<std::vector<int>>& conjugacy_classes() const noexcept { return classes_; }
    int class_of(int a) const { return class_index_[a]; }
    int class_count() const noexcept { return static_cast<int>(classes_.size()); }

    const std::vector<std::vector<int>>& table() const noexcept { return table_; }
    /// Degree and generator images when built from permutations; degree 0 otherwise.
    int permutation_degree() const noexcept { return permutation_degree_; }
    const std::vector<std::vector<int>>& generator_permutations() const noexcept { return permutations_; }

private:
    FiniteGroup() = default;
    void finalize(std::vector<int> generators, std::vector<std::string> generator_names);

    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    std::vector<int> orders_;
    int exponent_ = 1;
    bool abelian_ = true;
    std::vector<int> generators_;
    std::vector<std::string> generator_names_;
    std::vector<std::string> names_;
    std::vector<std::vector<std::pair<int, int>>> words_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_index_;
    int permutation_degree_ = 0;
    std::vector<std::vector<int>> permutations_;
};

/// Parse cycle notation such as `(1 2 3)(4 5)` on points 1..degree into an
/// image list on 0..degree-1.
std::vector<int> parse_cycles(std::string_view text, int degree);

class Subgroup {
public:
    Subgroup(GroupPtr parent, std::vector<int> elements);

    const GroupPtr& parent() const noexcept { return parent_; }
    const std::vector<int>& elements() const noexcept { return elements_; }
    int order() const noexcept { return static_cast<int>(elements_.size()); }
    bool contains(int g) const;
    bool is_normal() const;
    /// The subgroup as a group in its own right; element i corresponds to elements()[i].
    const GroupPtr& as_group() const noexcept { return as_group_; }
    /// Position of a parent element inside elements(), or -1.
    int local_index(int g) const;

    bool operator==(const Subgroup& other) const {
        return parent_ == other.parent_ && elements_ == other.elements_;
    }

private:
    GroupPtr parent_;
    std::vector<int> elements_;
    std::vector<int> local_;
    GroupPtr as_group_;
};

Subgroup generate_subgroup(const GroupPtr& group, const std::vector<int>& generators);
Subgroup whole_group(const GroupPtr& group);

struct CyclicSubgroupEntry {
    int representative;
    Subgroup subgroup;
};

/// One entry per conjugacy class, in class order.
std::vector<CyclicSubgroupEntry> cyclic_subgroup_representatives(const GroupPtr& group);

/// Class function stored as one value per conjugacy class of its group.
class ClassFunction {
public:
    ClassFunction(GroupPtr group, std::vector<Cyclotomic> class_values);
    /// Throws DomainError unless the values are constant on classes.
    static ClassFunction from_element_values(GroupPtr group, const std::vector<Cyclotomic>& values);
    static ClassFunction constant(GroupPtr group, const Cyclotomic& value);

    const GroupPtr& group() const noexcept { return group_; }
    const std::vector<Cyclotomic>& values() const noexcept { return values_; }
    const Cyclotomic& at(int element) const { return values_[group_->class_of(element)]; }
    Cyclotomic degree() const { return at(group_->identity()); }

    ClassFunction operator+(const ClassFunction& other) const;
    ClassFunction operator-(const ClassFunction& other) const;
    ClassFunction operator*(const ClassFunction& other) const;
    ClassFunction operator*(const Cyclotomic& scalar) const;
    bool operator==(const ClassFunction& other) const;
    ClassFunction conj() const;

    std::string str() const;

private:
    GroupPtr group_;
    std::vector<Cyclotomic> values_;
};

/// (1/|G|) sum a(g) conj(b(g)).
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);

/// Values on H, as a class function of H.as_group().
ClassFunction restrict(const ClassFunction& a, const Subgroup& h);

class MatrixRep {
public:
    /// Images of the group's generators, in generators() order.
    static MatrixRep from_generators(GroupPtr group, const std::vector<Matrix>& generator_images);
    /// Images of every element; validated as a homomorphism.
    static MatrixRep from_images(GroupPtr group, std::vector<Matrix> images);
    static MatrixRep trivial(GroupPtr group, int dim = 1);
    static MatrixRep regular(GroupPtr group);
    /// One-dimensional rep from a value per element.
    static MatrixRep linear(GroupPtr group, const std::vector<Cyclotomic>& values);

    const GroupPtr& group() const noexcept { return group_; }
    int dim() const noexcept { return dim_; }
    const Matrix& operator()(int g) const { return images_[g]; }
    const std::vector<Matrix>& images() const noexcept { return images_; }

    ClassFunction character() const;
    MatrixRep dual() const;
    MatrixRep direct_sum(const MatrixRep& other) const;
    MatrixRep tensor(const MatrixRep& other) const;
    /// g -> P * rho(g) * P^-1.
    MatrixRep change_basis(const Matrix& p) const;

private:
    MatrixRep(GroupPtr group, int dim, std::vector<Matrix> images);
    void validate() const;

    GroupPtr group_;
    int dim_ = 0;
    std::vector<Matrix> images_;
};

inline ClassFunction character_of(const MatrixRep& rep) { return rep.character(); }

/// All one-dimensional characters of an abelian group as reps, in a fixed
/// enumeration order (trivial first).
std::vector<MatrixRep> abelian_characters(const GroupPtr& group);

struct NamedRep {
    std::string name;
    MatrixRep rep;
};

/// The semidihedral group of order 16 on the eight roots of x^8 + 6x^4 - 3,
/// with its seven irreducible representations.
struct SD16 {
    GroupPtr group;
    int s;
    int t;
    Subgroup inertia;  // <s^2, s*t>, quaternion
    std::vector<NamedRep> irreps;  // triv, eps1, eps2, eps3, U, rho, rho'
    std::vector<ClassFunction> table;  // characters typed in column by column
    /// Representative word of each typed column, in the column order.
    std::vector<std::string> column_words;
};

/// Throws DomainError if the typed character table disagrees with the
/// characters of the constructed reps or the typed columns are not exactly
/// the conjugacy classes.
SD16 build_sd16();

}  // namespace weilrep
