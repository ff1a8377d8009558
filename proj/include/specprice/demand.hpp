#ifndef SPECPRICE_DEMAND_HPP
#define SPECPRICE_DEMAND_HPP

#include <cstddef>
#include <vector>

namespace specprice {

// Per-year subscriber counts and traffic over the modeling horizon.
// Traffic is measured in millions of Mbytes per year; subscribers in persons.
struct DemandSeries {
    std::vector<double> subscribers;
    std::vector<double> voice_mbytes;
    std::vector<double> data_mbytes;

    std::size_t horizon() const { return subscribers.size(); }

    double total_mbytes(std::size_t t) const {
        return voice_mbytes[t] + data_mbytes[t];
    }

    std::vector<double> total_mbytes() const {
        std::vector<double> total(voice_mbytes.size());
        for (std::size_t t = 0; t < total.size(); ++t)
            total[t] = voice_mbytes[t] + data_mbytes[t];
        return total;
    }

    // Undiscounted traffic over the whole horizon, millions of Mbytes.
    double total_undiscounted() const {
        double sum = 0.0;
        for (std::size_t t = 0; t < voice_mbytes.size(); ++t)
            sum += voice_mbytes[t] + data_mbytes[t];
        return sum;
    }

    // Throws InvariantViolation when lengths disagree with the horizon or
    // any entry is negative or non-finite.
    void validate(int horizon_years) const;
};

}  // namespace specprice

#endif  // SPECPRICE_DEMAND_HPP
