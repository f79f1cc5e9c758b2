#pragma once

#include "cdiff/polynomial.hpp"
#include "cdiff/rational.hpp"

#include <optional>
#include <string>
#include <utility>

namespace cdiff {

/// First failing parameter tuple of an identity check, with both sides
/// printed exactly.
struct Counterexample {
    std::string parameters;
    std::string lhs;
    std::string rhs;
};

/// Outcome of one exact identity check over a finite parameter sweep.
class VerificationReport {
public:
    VerificationReport(std::string id, std::string range, std::optional<Counterexample> counterexample = {})
        : id_(std::move(id)), range_(std::move(range)), counterexample_(std::move(counterexample)) {}

    const std::string& identity_id() const { return id_; }
    const std::string& param_range() const { return range_; }
    bool passed() const { return !counterexample_.has_value(); }
    const std::optional<Counterexample>& counterexample() const { return counterexample_; }

private:
    std::string id_;
    std::string range_;
    std::optional<Counterexample> counterexample_;
};

/// Accumulates equality checks and keeps only the first failure.
class ReportBuilder {
public:
    ReportBuilder(std::string id, std::string range) : id_(std::move(id)), range_(std::move(range)) {}

    /// Compares lhs == rhs; params is only invoked when recording a failure.
    template <typename T, typename ParamsFn>
    bool check(const T& lhs, const T& rhs, ParamsFn&& params) {
        if (lhs == rhs) return true;
        if (!first_) {
            using cdiff::to_string;
            first_ = Counterexample{std::forward<ParamsFn>(params)(), to_string(lhs), to_string(rhs)};
        }
        return false;
    }

    bool failed() const { return first_.has_value(); }

    /// Merges a sub-report: adopts its counterexample if this builder has none.
    void absorb(const VerificationReport& sub) {
        if (!first_ && !sub.passed()) {
            auto c = *sub.counterexample();
            c.parameters = sub.identity_id() + ": " + c.parameters;
            first_ = std::move(c);
        }
    }

    VerificationReport report() const { return {id_, range_, first_}; }

private:
    std::string id_;
    std::string range_;
    std::optional<Counterexample> first_;
};

}  // namespace cdiff
