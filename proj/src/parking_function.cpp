#include "parking/parking_function.hpp"

#include "parking/errors.hpp"

#include <algorithm>
#include <string>

namespace parking {

namespace {

void validate_sequence(std::span<const int> seq) {
    if (seq.empty()) throw ValidationError("preference sequence must be non-empty");
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] < 1) {
            throw ValidationError("entry " + std::to_string(i + 1) + " is " +
                                  std::to_string(seq[i]) + "; preferences must be positive");
        }
    }
}

void check_enumeration_size(int n, int cap) {
    if (n < 1) throw ValidationError("n must be at least 1");
    if (n > cap) {
        throw ResourceLimitError("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                                 std::to_string(cap));
    }
}

}  // namespace

ParkingFunction::ParkingFunction(std::vector<int> entries) : entries_(std::move(entries)) {
    validate_sequence(entries_);
    const int n = size();
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] > n) {
            throw ValidationError("entry " + std::to_string(i + 1) + " is " +
                                  std::to_string(entries_[i]) + ", larger than n = " +
                                  std::to_string(n));
        }
    }
    if (!check_by_sort(entries_)) throw ValidationError("sequence is not a parking function");
}

ParkingOutcome check_by_simulation(std::span<const int> seq) {
    validate_sequence(seq);
    const auto n = static_cast<int>(seq.size());
    std::vector<bool> taken(static_cast<std::size_t>(n) + 1, false);
    ParkingOutcome outcome;
    outcome.assignment.reserve(seq.size());
    for (int car = 0; car < n; ++car) {
        int spot = seq[car];
        while (spot <= n && taken[spot]) ++spot;
        if (spot > n) {
            outcome.success = false;
            outcome.assignment.clear();
            outcome.first_failed_car = car + 1;
            return outcome;
        }
        taken[spot] = true;
        outcome.assignment.push_back(spot);
    }
    outcome.success = true;
    return outcome;
}

bool check_by_sort(std::span<const int> seq) {
    validate_sequence(seq);
    std::vector<int> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted[k] > static_cast<int>(k) + 1) return false;
    }
    return true;
}

void for_each_parking_function_with_first(
    int n, int first, const std::function<void(const ParkingFunction&)>& visit, int cap) {
    check_enumeration_size(n, cap);
    if (first < 1 || first > n) return;

    // Odometer over the tail positions; lexicographic because the last digit moves fastest.
    std::vector<int> seq(static_cast<std::size_t>(n), 1);
    seq[0] = first;
    while (true) {
        if (check_by_sort(seq)) visit(ParkingFunction(seq));
        int pos = n - 1;
        while (pos >= 1 && seq[pos] == n) {
            seq[pos] = 1;
            --pos;
        }
        if (pos < 1) break;
        ++seq[pos];
    }
}

void for_each_parking_function(int n, const std::function<void(const ParkingFunction&)>& visit,
                               int cap) {
    check_enumeration_size(n, cap);
    for (int first = 1; first <= n; ++first) {
        for_each_parking_function_with_first(n, first, visit, cap);
    }
}

std::vector<ParkingFunction> enumerate_parking_functions(int n, int cap) {
    std::vector<ParkingFunction> out;
    for_each_parking_function(n, [&](const ParkingFunction& pf) { out.push_back(pf); }, cap);
    return out;
}

BigInt count_parking_functions(int n) {
    if (n < 1) throw ValidationError("n must be at least 1");
    return boost::multiprecision::pow(BigInt(n + 1), static_cast<unsigned>(n - 1));
}

}  // namespace parking
