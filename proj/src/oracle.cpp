#include "weilrep/oracle.hpp"

#include "weilrep/errors.hpp"

namespace weilrep {

EulerFactor RepOracle::query(const FieldDescriptor& field) const { return euler_factor(rho_, field); }

TableOracle::TableOracle(QuotientPtr quotient, std::vector<TableEntry> entries)
    : quotient_(std::move(quotient)), entries_(std::move(entries)) {
    for (const auto& e : entries_)
        if (e.field.quotient() != quotient_) throw DomainError("table entry belongs to another quotient");
}

EulerFactor TableOracle::query(const FieldDescriptor& field) const {
    for (const auto& e : entries_)
        if (e.field.same_field(field)) return e.answer;
    throw MissingDataError("oracle table has no entry for " + field.str());
}

EulerFactor CountingOracle::query(const FieldDescriptor& field) const {
    ++count_;
    return inner_->query(field);
}

TableOracle tabulate(const WeilRep& rho, const std::vector<FieldDescriptor>& fields) {
    std::vector<TableEntry> entries;
    for (const auto& f : fields) entries.push_back({f, euler_factor(rho, f)});
    return TableOracle(rho.quotient(), std::move(entries));
}

}  // namespace weilrep
