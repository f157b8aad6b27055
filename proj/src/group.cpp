#include "weilrep/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "weilrep/errors.hpp"
#include "weilrep/text.hpp"

namespace weilrep {

namespace {

std::string word_name(const std::vector<std::pair<int, int>>& w, const std::vector<std::string>& gens) {
    if (w.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += "*";
        out += gens[w[i].first];
        if (w[i].second != 1) out += "^" + std::to_string(w[i].second);
    }
    return out;
}

}  // namespace

GroupPtr FiniteGroup::from_permutations(std::vector<std::string> generator_names,
                                        const std::vector<std::vector<int>>& permutations) {
    if (generator_names.size() != permutations.size()) throw DomainError("generator names and permutations differ in count");
    std::size_t degree = permutations.empty() ? 0 : permutations[0].size();
    for (const auto& p : permutations) {
        if (p.size() != degree) throw DomainError("permutations of different degrees");
        std::vector<bool> seen(degree, false);
        for (int x : p) {
            if (x < 0 || static_cast<std::size_t>(x) >= degree || seen[x]) throw DomainError("not a permutation");
            seen[x] = true;
        }
    }
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> elements{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(degree);
        for (std::size_t x = 0; x < degree; ++x) c[x] = a[b[x]];
        return c;
    };
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (const auto& g : permutations) {
            auto y = compose(elements[i], g);
            if (!index.count(y)) {
                if (elements.size() >= 4096) throw DomainError("permutation group too large");
                index.emplace(y, static_cast<int>(elements.size()));
                elements.push_back(std::move(y));
            }
        }
    }
    std::size_t n = elements.size();
    auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    group->table_.assign(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) group->table_[a][b] = index.at(compose(elements[a], elements[b]));
    std::vector<int> gens;
    for (const auto& g : permutations) gens.push_back(index.at(g));
    group->permutation_degree_ = static_cast<int>(degree);
    group->permutations_ = permutations;
    group->finalize(std::move(gens), std::move(generator_names));
    return group;
}

GroupPtr FiniteGroup::from_table(std::vector<std::vector<int>> table, std::vector<std::string> names,
                                 std::vector<int> generators) {
    int n = static_cast<int>(table.size());
    if (n == 0) throw DomainError("empty group table");
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n) throw DomainError("group table is not square");
        std::vector<bool> row(n, false);
        for (int b = 0; b < n; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= n || row[v]) throw DomainError("group table row is not a permutation");
            row[v] = true;
        }
        if (table[0][a] != a || table[a][0] != a) throw DomainError("element 0 is not the identity");
    }
    if (!names.empty() && static_cast<int>(names.size()) != n) throw DomainError("element name count mismatch");
    auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    group->table_ = std::move(table);
    if (generators.empty()) {
        std::vector<bool> reached(n, false);
        reached[0] = true;
        std::vector<int> current{0};
        for (int g = 1; g < n; ++g) {
            if (reached[g]) continue;
            generators.push_back(g);
            // re-close
            std::vector<int> frontier = current;
            frontier.push_back(g);
            reached[g] = true;
            for (std::size_t i = 0; i < frontier.size(); ++i) {
                for (int h : generators) {
                    int y = group->table_[frontier[i]][h];
                    if (!reached[y]) {
                        reached[y] = true;
                        frontier.push_back(y);
                    }
                }
            }
            current = frontier;
        }
    }
    std::vector<std::string> gen_names;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        gen_names.push_back(names.empty() ? "x" + std::to_string(i + 1) : names[generators[i]]);
    }
    group->finalize(generators, gen_names);
    if (!names.empty()) group->names_ = std::move(names);
    return group;
}

GroupPtr FiniteGroup::cyclic(int n, const std::string& generator) {
    if (n <= 0) throw DomainError("cyclic group order must be positive");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = (i + 1) % n;
    if (n == 1) return trivial();
    return from_permutations({generator}, {perm});
}

GroupPtr FiniteGroup::trivial() { return from_table({{0}}); }

void FiniteGroup::finalize(std::vector<int> generators, std::vector<std::string> generator_names) {
    const int n = order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw DomainError("group table is not associative");
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table_[a][b] == 0) inverse_[a] = b;
    orders_.assign(n, 1);
    exponent_ = 1;
    for (int a = 0; a < n; ++a) {
        int x = a, k = 1;
        while (x != 0) {
            x = table_[x][a];
            ++k;
        }
        orders_[a] = k;
        exponent_ = std::lcm(exponent_, orders_[a]);
    }
    abelian_ = true;
    for (int a = 0; a < n && abelian_; ++a)
        for (int b = 0; b < n; ++b)
            if (table_[a][b] != table_[b][a]) {
                abelian_ = false;
                break;
            }
    generators_ = std::move(generators);
    generator_names_ = std::move(generator_names);

    // Words: prefer normal forms g1^a1 * ... * gk^ak of least exponent sum, fall back to BFS.
    words_.assign(n, {});
    std::vector<int> weight(n, -1);
    weight[0] = 0;
    const std::size_t k = generators_.size();
    long combos = 1;
    for (int g : generators_) combos = combos * orders_[g] > 100000 ? 100001 : combos * orders_[g];
    if (combos <= 100000) {
        std::vector<int> exps(k, 0);
        for (long c = 0; c < combos; ++c) {
            long rest = c;
            for (std::size_t i = k; i-- > 0;) {
                exps[i] = static_cast<int>(rest % orders_[generators_[i]]);
                rest /= orders_[generators_[i]];
            }
            int x = 0, w = 0;
            std::vector<std::pair<int, int>> word;
            for (std::size_t i = 0; i < k; ++i) {
                if (exps[i] == 0) continue;
                x = table_[x][pow(generators_[i], exps[i])];
                w += exps[i];
                word.emplace_back(static_cast<int>(i), exps[i]);
            }
            if (weight[x] < 0 || w < weight[x]) {
                weight[x] = w;
                words_[x] = std::move(word);
            }
        }
    }
    std::deque<int> queue{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < k; ++i) {
            int y = table_[x][generators_[i]];
            if (seen[y]) continue;
            seen[y] = true;
            queue.push_back(y);
            if (weight[y] >= 0) continue;
            weight[y] = weight[x] + 1;
            words_[y] = words_[x];
            if (!words_[y].empty() && words_[y].back().first == static_cast<int>(i)) {
                ++words_[y].back().second;
            } else {
                words_[y].emplace_back(static_cast<int>(i), 1);
            }
        }
    }
    for (int a = 0; a < n; ++a)
        if (weight[a] < 0) throw DomainError("generators do not generate the group");
    names_.clear();
    for (int a = 0; a < n; ++a) names_.push_back(word_name(words_[a], generator_names_));

    class_index_.assign(n, -1);
    std::vector<std::vector<int>> classes;
    for (int a = 0; a < n; ++a) {
        if (class_index_[a] >= 0) continue;
        std::vector<int> cls;
        for (int x = 0; x < n; ++x) cls.push_back(conjugate(a, x));
        std::sort(cls.begin(), cls.end());
        cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
        for (int m : cls) class_index_[m] = 0;
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [&](const auto& x, const auto& y) {
        return std::make_pair(orders_[x[0]], x[0]) < std::make_pair(orders_[y[0]], y[0]);
    });
    classes_ = std::move(classes);
    for (std::size_t c = 0; c < classes_.size(); ++c)
        for (int m : classes_[c]) class_index_[m] = static_cast<int>(c);
}

int FiniteGroup::pow(int a, long k) const {
    long o = orders_.empty() ? 0 : orders_[a];
    if (o > 0) {
        k %= o;
        if (k < 0) k += o;
    }
    int x = 0;
    for (long i = 0; i < k; ++i) x = table_[x][a];
    return x;
}

bool FiniteGroup::is_cyclic() const {
    return std::any_of(orders_.begin(), orders_.end(), [&](int o) { return o == order(); });
}

int FiniteGroup::cyclic_generator() const {
    for (int a = 0; a < order(); ++a)
        if (orders_[a] == order()) return a;
    throw DomainError("group is not cyclic");
}

int FiniteGroup::parse_element(std::string_view word) const {
    word = text::strip(word);
    if (word.empty()) throw ParseError("empty group element");
    if (word == "e" || word == "1") return 0;
    for (int a = 0; a < order(); ++a)
        if (names_[a] == word) return a;
    int x = 0;
    for (auto factor : text::split_top_level(word, '*')) {
        std::string_view base = factor;
        long exp = 1;
        auto caret = factor.find('^');
        if (caret != std::string_view::npos) {
            base = text::strip(factor.substr(0, caret));
            exp = text::parse_long(factor.substr(caret + 1));
        }
        int g = -1;
        if (base == "e" || base == "1") {
            g = 0;
        } else {
            for (std::size_t i = 0; i < generator_names_.size(); ++i)
                if (generator_names_[i] == base) g = generators_[i];
            if (g < 0) {
                for (int a = 0; a < order(); ++a)
                    if (names_[a] == base) g = a;
            }
        }
        if (g < 0) throw ParseError("unknown group element '" + std::string(base) + "'");
        x = mul(x, pow(g, exp));
    }
    return x;
}

std::vector<int> parse_cycles(std::string_view input, int degree) {
    std::vector<int> perm(degree);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> moved(degree, false);
    std::string_view s = text::strip(input);
    if (s == "()" || s == "e" || s.empty()) return perm;
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        if (s[i] != '(') throw ParseError("expected '(' in cycle notation");
        auto close = s.find(')', i);
        if (close == std::string_view::npos) throw ParseError("unterminated cycle");
        std::vector<int> cycle;
        for (const auto& tok : text::tokens(s.substr(i + 1, close - i - 1))) {
            for (auto piece : text::split_top_level(tok, ',')) {
                if (piece.empty()) continue;
                long p = text::parse_long(piece);
                if (p < 1 || p > degree) throw ParseError("cycle point out of range");
                cycle.push_back(static_cast<int>(p - 1));
            }
        }
        for (std::size_t j = 0; j < cycle.size(); ++j) {
            if (moved[cycle[j]]) throw ParseError("point repeated in cycle notation");
            moved[cycle[j]] = true;
            perm[cycle[j]] = cycle[(j + 1) % cycle.size()];
        }
        i = close + 1;
    }
    return perm;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elements) : parent_(std::move(parent)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    const int n = parent_->order();
    local_.assign(n, -1);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] < 0 || elements_[i] >= n) throw DomainError("subgroup element out of range");
        local_[elements_[i]] = static_cast<int>(i);
    }
    if (elements_.empty() || elements_[0] != 0) throw DomainError("subgroup must contain the identity");
    const int m = order();
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            int prod = local_[parent_->mul(elements_[a], elements_[b])];
            if (prod < 0) throw DomainError("element set is not closed under multiplication");
            table[a][b] = prod;
        }
    }
    std::vector<std::string> names;
    for (int g : elements_) names.push_back(parent_->name(g));
    as_group_ = FiniteGroup::from_table(std::move(table), std::move(names));
}

bool Subgroup::contains(int g) const { return g >= 0 && g < static_cast<int>(local_.size()) && local_[g] >= 0; }

int Subgroup::local_index(int g) const { return contains(g) ? local_[g] : -1; }

bool Subgroup::is_normal() const {
    for (int x = 0; x < parent_->order(); ++x)
        for (int h : elements_)
            if (!contains(parent_->conjugate(h, x))) return false;
    return true;
}

Subgroup generate_subgroup(const GroupPtr& group, const std::vector<int>& generators) {
    std::vector<int> elems{0};
    std::vector<bool> seen(group->order(), false);
    seen[0] = true;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (int g : generators) {
            if (g < 0 || g >= group->order()) throw DomainError("generator out of range");
            int y = group->mul(elems[i], g);
            if (!seen[y]) {
                seen[y] = true;
                elems.push_back(y);
            }
        }
    }
    return Subgroup(group, elems);
}

Subgroup whole_group(const GroupPtr& group) {
    std::vector<int> all(group->order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(group, all);
}

std::vector<CyclicSubgroupEntry> cyclic_subgroup_representatives(const GroupPtr& group) {
    std::vector<CyclicSubgroupEntry> out;
    for (const auto& cls : group->conjugacy_classes()) out.push_back({cls[0], generate_subgroup(group, {cls[0]})});
    return out;
}

// ---------------------------------------------------------------------------

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclotomic> class_values)
    : group_(std::move(group)), values_(std::move(class_values)) {
    if (static_cast<int>(values_.size()) != group_->class_count()) throw DomainError("class function length mismatch");
}

ClassFunction ClassFunction::from_element_values(GroupPtr group, const std::vector<Cyclotomic>& values) {
    if (static_cast<int>(values.size()) != group->order()) throw DomainError("element value count mismatch");
    std::vector<Cyclotomic> per_class;
    for (const auto& cls : group->conjugacy_classes()) {
        for (int m : cls)
            if (!(values[m] == values[cls[0]])) throw DomainError("values are not constant on a conjugacy class");
        per_class.push_back(values[cls[0]]);
    }
    return ClassFunction(std::move(group), std::move(per_class));
}

ClassFunction ClassFunction::constant(GroupPtr group, const Cyclotomic& value) {
    std::vector<Cyclotomic> v(group->class_count(), value);
    return ClassFunction(std::move(group), std::move(v));
}

namespace {

void require_same_group(const ClassFunction& a, const ClassFunction& b) {
    if (a.group() != b.group() && a.group()->table() != b.group()->table()) {
        throw DomainError("class functions live on different groups");
    }
}

}  // namespace

ClassFunction ClassFunction::operator+(const ClassFunction& other) const {
    require_same_group(*this, other);
    ClassFunction out = *this;
    for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] += other.values_[i];
    return out;
}

ClassFunction ClassFunction::operator-(const ClassFunction& other) const {
    require_same_group(*this, other);
    ClassFunction out = *this;
    for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] -= other.values_[i];
    return out;
}

ClassFunction ClassFunction::operator*(const ClassFunction& other) const {
    require_same_group(*this, other);
    ClassFunction out = *this;
    for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] *= other.values_[i];
    return out;
}

ClassFunction ClassFunction::operator*(const Cyclotomic& scalar) const {
    ClassFunction out = *this;
    for (auto& v : out.values_) v *= scalar;
    return out;
}

bool ClassFunction::operator==(const ClassFunction& other) const {
    if (group_ != other.group_ && group_->table() != other.group_->table()) return false;
    return values_ == other.values_;
}

ClassFunction ClassFunction::conj() const {
    ClassFunction out = *this;
    for (auto& v : out.values_) v = v.conj();
    return out;
}

std::string ClassFunction::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? ", " : "") << values_[i].str();
    os << ")";
    return os.str();
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
    require_same_group(a, b);
    const auto& classes = a.group()->conjugacy_classes();
    Cyclotomic sum;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        sum += Cyclotomic(static_cast<long>(classes[c].size())) * a.values()[c] * b.values()[c].conj();
    }
    return sum / Cyclotomic(a.group()->order());
}

ClassFunction restrict(const ClassFunction& a, const Subgroup& h) {
    if (h.parent() != a.group() && h.parent()->table() != a.group()->table()) {
        throw DomainError("restriction to a subgroup of a different group");
    }
    const auto& sub = h.as_group();
    std::vector<Cyclotomic> values;
    for (const auto& cls : sub->conjugacy_classes()) values.push_back(a.at(h.elements()[cls[0]]));
    return ClassFunction(sub, std::move(values));
}

// ---------------------------------------------------------------------------

MatrixRep::MatrixRep(GroupPtr group, int dim, std::vector<Matrix> images)
    : group_(std::move(group)), dim_(dim), images_(std::move(images)) {}

void MatrixRep::validate() const {
    const int n = group_->order();
    if (static_cast<int>(images_.size()) != n) throw DomainError("representation image count mismatch");
    for (const auto& m : images_)
        if (m.rows() != dim_ || m.cols() != dim_) throw DomainError("representation matrix has wrong shape");
    if (!(images_[0] == Matrix::identity(dim_))) throw DomainError("identity does not map to the identity matrix");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!(images_[a] * images_[b] == images_[group_->mul(a, b)])) {
                throw DomainError("matrices do not define a homomorphism (" + group_->name(a) + ", " +
                                  group_->name(b) + ")");
            }
}

MatrixRep MatrixRep::from_generators(GroupPtr group, const std::vector<Matrix>& generator_images) {
    if (generator_images.size() != group->generators().size()) throw DomainError("one image per generator required");
    int dim = generator_images.empty() ? 0 : generator_images[0].rows();
    std::vector<Matrix> images;
    images.reserve(group->order());
    for (int a = 0; a < group->order(); ++a) {
        Matrix m = Matrix::identity(dim);
        for (auto [gi, e] : group->word(a)) m = m * generator_images[gi].pow(e);
        images.push_back(std::move(m));
    }
    MatrixRep rep(std::move(group), dim, std::move(images));
    rep.validate();
    return rep;
}

MatrixRep MatrixRep::from_images(GroupPtr group, std::vector<Matrix> images) {
    int dim = images.empty() ? 0 : images[0].rows();
    MatrixRep rep(std::move(group), dim, std::move(images));
    rep.validate();
    return rep;
}

MatrixRep MatrixRep::trivial(GroupPtr group, int dim) {
    std::vector<Matrix> images(group->order(), Matrix::identity(dim));
    return MatrixRep(std::move(group), dim, std::move(images));
}

MatrixRep MatrixRep::regular(GroupPtr group) {
    const int n = group->order();
    std::vector<Matrix> images;
    for (int g = 0; g < n; ++g) {
        Matrix m(n, n);
        for (int x = 0; x < n; ++x) m(group->mul(g, x), x) = Cyclotomic(1);
        images.push_back(std::move(m));
    }
    return MatrixRep(std::move(group), n, std::move(images));
}

MatrixRep MatrixRep::linear(GroupPtr group, const std::vector<Cyclotomic>& values) {
    std::vector<Matrix> images;
    for (const auto& v : values) images.push_back(Matrix::diagonal({v}));
    return from_images(std::move(group), std::move(images));
}

ClassFunction MatrixRep::character() const {
    std::vector<Cyclotomic> values;
    for (const auto& cls : group_->conjugacy_classes()) values.push_back(images_[cls[0]].trace());
    return ClassFunction(group_, std::move(values));
}

MatrixRep MatrixRep::dual() const {
    std::vector<Matrix> images;
    for (const auto& m : images_) images.push_back(m.inverse().transpose());
    return MatrixRep(group_, dim_, std::move(images));
}

MatrixRep MatrixRep::direct_sum(const MatrixRep& other) const {
    if (group_ != other.group_) throw DomainError("direct sum of reps of different groups");
    std::vector<Matrix> images;
    for (std::size_t g = 0; g < images_.size(); ++g) images.push_back(Matrix::direct_sum(images_[g], other.images_[g]));
    return MatrixRep(group_, dim_ + other.dim_, std::move(images));
}

MatrixRep MatrixRep::tensor(const MatrixRep& other) const {
    if (group_ != other.group_) throw DomainError("tensor product of reps of different groups");
    std::vector<Matrix> images;
    for (std::size_t g = 0; g < images_.size(); ++g) images.push_back(images_[g].kronecker(other.images_[g]));
    return MatrixRep(group_, dim_ * other.dim_, std::move(images));
}

MatrixRep MatrixRep::change_basis(const Matrix& p) const {
    Matrix pinv = p.inverse();
    std::vector<Matrix> images;
    for (const auto& m : images_) images.push_back(p * m * pinv);
    return MatrixRep(group_, dim_, std::move(images));
}

std::vector<MatrixRep> abelian_characters(const GroupPtr& group) {
    if (!group->is_abelian()) throw DomainError("abelian_characters needs an abelian group");
    const auto& gens = group->generators();
    const int e = group->exponent();
    long combos = 1;
    for (int g : gens) combos *= group->element_order(g);
    std::vector<MatrixRep> out;
    std::vector<std::vector<long>> seen;
    for (long c = 0; c < combos; ++c) {
        std::vector<long> k(gens.size());
        long rest = c;
        for (std::size_t i = gens.size(); i-- > 0;) {
            int o = group->element_order(gens[i]);
            k[i] = (rest % o) * (e / o);
            rest /= o;
        }
        // exponent of zeta_e at each element
        std::vector<long> expo(group->order(), 0);
        for (int a = 0; a < group->order(); ++a) {
            long s = 0;
            for (auto [gi, p] : group->word(a)) s += k[gi] * p;
            expo[a] = ((s % e) + e) % e;
        }
        bool hom = true;
        for (int a = 0; a < group->order() && hom; ++a)
            for (int b = 0; b < group->order(); ++b)
                if ((expo[a] + expo[b]) % e != expo[group->mul(a, b)]) {
                    hom = false;
                    break;
                }
        if (!hom || std::find(seen.begin(), seen.end(), expo) != seen.end()) continue;
        seen.push_back(expo);
        std::vector<Cyclotomic> values;
        for (long x : expo) values.push_back(Cyclotomic::root_of_unity(e, x));
        out.push_back(MatrixRep::linear(group, values));
    }
    if (static_cast<int>(out.size()) != group->order()) throw DomainError("character enumeration incomplete");
    return out;
}

// ---------------------------------------------------------------------------

SD16 build_sd16() {
    // roots of x^8 + 6x^4 - 3 numbered along the 8-cycle s:
    // 1: a, 2: -ib, 3: ia, 4: b, 5: -a, 6: ib, 7: -ia, 8: -b
    auto group = FiniteGroup::from_permutations({"s", "t"}, {parse_cycles("(1 2 3 4 5 6 7 8)", 8),
                                                             parse_cycles("(2 4)(3 7)(6 8)", 8)});
    SD16 out{group, group->parse_element("s"), group->parse_element("t"), whole_group(group), {}, {}, {}};
    if (group->order() != 16) throw DomainError("SD16 closure has wrong order");
    if (group->conjugate(out.s, out.t) != group->pow(out.s, 3)) throw DomainError("t s t^-1 != s^3");
    out.inertia = generate_subgroup(group, {group->pow(out.s, 2), group->mul(out.s, out.t)});

    const Cyclotomic one(1), zero(0), minus(-1);
    const Cyclotomic z8 = Cyclotomic::root_of_unity(8);
    auto m = [](std::vector<std::vector<Cyclotomic>> rows) { return Matrix(std::move(rows)); };
    auto scalar = [](const Cyclotomic& v) { return Matrix::diagonal({v}); };
    const Matrix swap = m({{zero, one}, {one, zero}});
    out.irreps = {
        {"triv", MatrixRep::from_generators(group, {scalar(one), scalar(one)})},
        {"eps1", MatrixRep::from_generators(group, {scalar(one), scalar(minus)})},
        {"eps2", MatrixRep::from_generators(group, {scalar(minus), scalar(minus)})},
        {"eps3", MatrixRep::from_generators(group, {scalar(minus), scalar(one)})},
        {"U", MatrixRep::from_generators(group, {m({{zero, minus}, {one, zero}}), m({{one, zero}, {zero, minus}})})},
        {"rho", MatrixRep::from_generators(group, {Matrix::diagonal({z8.pow(5), z8.pow(7)}), swap})},
        {"rho'", MatrixRep::from_generators(group, {Matrix::diagonal({z8, z8.pow(3)}), swap})},
    };

    // typed character table: columns are element sets, rows are values
    const Cyclotomic r = sqrt_rational(Rational(-2));
    const std::vector<std::vector<std::string>> columns = {
        {"e"}, {"s^4"}, {"s^2", "s^6"}, {"s", "s^3"}, {"s^5", "s^7"},
        {"t", "s^2*t", "s^4*t", "s^6*t"}, {"s*t", "s^3*t", "s^5*t", "s^7*t"}};
    const std::vector<std::vector<Cyclotomic>> rows = {
        {1, 1, 1, 1, 1, 1, 1},
        {1, 1, 1, 1, 1, -1, -1},
        {1, 1, 1, -1, -1, -1, 1},
        {1, 1, 1, -1, -1, 1, -1},
        {2, 2, -2, 0, 0, 0, 0},
        {2, -2, 0, -r, r, 0, 0},
        {2, -2, 0, r, -r, 0, 0},
    };
    for (const auto& col : columns) {
        std::vector<int> members;
        for (const auto& w : col) members.push_back(group->parse_element(w));
        std::sort(members.begin(), members.end());
        if (members != group->conjugacy_classes()[group->class_of(members[0])]) {
            throw DomainError("typed column " + col[0] + " is not a conjugacy class");
        }
        out.column_words.push_back(col[0]);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<Cyclotomic> values(group->order());
        for (std::size_t c = 0; c < columns.size(); ++c)
            for (const auto& w : columns[c]) values[group->parse_element(w)] = rows[i][c];
        auto chi = ClassFunction::from_element_values(group, values);
        if (!(chi == out.irreps[i].rep.character())) {
            throw DomainError("typed character of " + out.irreps[i].name + " disagrees with its matrices");
        }
        out.table.push_back(std::move(chi));
    }
    return out;
}

}  // namespace weilrep
