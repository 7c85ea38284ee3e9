#pragma once

#include "parking/rational.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace parking {

inline constexpr int kDefaultParkingFunctionCap = 7;

/// A certified parking function: every entry in [1, n] and the sorted entries
/// satisfy z_k <= k. Entries are 1-based car preferences.
class ParkingFunction {
public:
    /// Throws ValidationError unless `entries` is a parking function with all entries <= n.
    explicit ParkingFunction(std::vector<int> entries);

    int size() const noexcept { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const noexcept { return entries_; }
    int operator[](std::size_t i) const { return entries_[i]; }

    friend bool operator==(const ParkingFunction&, const ParkingFunction&) = default;
    friend auto operator<=>(const ParkingFunction&, const ParkingFunction&) = default;

private:
    std::vector<int> entries_;
};

struct ParkingOutcome {
    bool success = false;
    /// spot (1-based) taken by each car; filled iff success
    std::vector<int> assignment;
    /// 1-based index of the first car that ran off the end; set iff !success
    std::optional<int> first_failed_car;
};

/// Parks the cars in order, each at the first free spot at or after its preference.
/// Entries larger than the length are accepted and simply fail to park.
ParkingOutcome check_by_simulation(std::span<const int> seq);

/// Sorted criterion: ascending sort satisfies z_k <= k.
bool check_by_sort(std::span<const int> seq);

/// Visits every parking function of length n in lexicographic order.
/// Throws ValidationError for n < 1, ResourceLimitError for n > cap.
void for_each_parking_function(int n, const std::function<void(const ParkingFunction&)>& visit,
                               int cap = kDefaultParkingFunctionCap);

/// Same as for_each_parking_function, restricted to functions whose first entry is `first`.
/// The union over first = 1..n, concatenated in order, is the full lexicographic stream.
void for_each_parking_function_with_first(
    int n, int first, const std::function<void(const ParkingFunction&)>& visit,
    int cap = kDefaultParkingFunctionCap);

std::vector<ParkingFunction> enumerate_parking_functions(int n,
                                                         int cap = kDefaultParkingFunctionCap);

/// (n+1)^(n-1), exact.
BigInt count_parking_functions(int n);

}  // namespace parking
