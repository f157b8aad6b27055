#pragma once

// Sources of local polynomials: a synthetic oracle backed by a WeilRep and a
// table oracle backed by explicit (descriptor, polynomial) entries.

#include <atomic>
#include <memory>
#include <vector>

#include "weilrep/quotient.hpp"
#include "weilrep/weilrep.hpp"

namespace weilrep {

class EulerOracle {
public:
    virtual ~EulerOracle() = default;
    /// Deterministic per descriptor; safe to call concurrently.
    virtual EulerFactor query(const FieldDescriptor& field) const = 0;
    virtual const QuotientPtr& quotient() const = 0;
};

using OraclePtr = std::shared_ptr<const EulerOracle>;

class RepOracle : public EulerOracle {
public:
    explicit RepOracle(WeilRep rho) : rho_(std::move(rho)) {}
    EulerFactor query(const FieldDescriptor& field) const override;
    const QuotientPtr& quotient() const override { return rho_.quotient(); }
    const WeilRep& rep() const noexcept { return rho_; }

private:
    WeilRep rho_;
};

struct TableEntry {
    FieldDescriptor field;
    EulerFactor answer;
};

/// Answers by field equality with a stored descriptor; anything else raises
/// MissingDataError naming the descriptor.
class TableOracle : public EulerOracle {
public:
    TableOracle(QuotientPtr quotient, std::vector<TableEntry> entries);
    EulerFactor query(const FieldDescriptor& field) const override;
    const QuotientPtr& quotient() const override { return quotient_; }
    const std::vector<TableEntry>& entries() const noexcept { return entries_; }

private:
    QuotientPtr quotient_;
    std::vector<TableEntry> entries_;
};

/// Forwards to another oracle and counts the calls.
class CountingOracle : public EulerOracle {
public:
    explicit CountingOracle(OraclePtr inner) : inner_(std::move(inner)) {}
    EulerFactor query(const FieldDescriptor& field) const override;
    const QuotientPtr& quotient() const override { return inner_->quotient(); }
    long count() const noexcept { return count_.load(); }

private:
    OraclePtr inner_;
    mutable std::atomic<long> count_{0};
};

/// Table of answers of `rho` over the given descriptors.
TableOracle tabulate(const WeilRep& rho, const std::vector<FieldDescriptor>& fields);

}  // namespace weilrep
