// timeseries.hpp — uniformly sampled named channels over a time grid

#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dicke {

class TimeSeries {
  public:
    TimeSeries() = default;

    explicit TimeSeries(std::vector<std::string> channel_names)
        : names_(std::move(channel_names)), data_(names_.size()) {}

    void push_sample(double t, const std::vector<double>& values) {
        if (values.size() != names_.size())
            throw std::invalid_argument("TimeSeries: sample arity mismatch");
        if (!t_.empty() && t <= t_.back())
            throw std::invalid_argument("TimeSeries: sample times must be strictly increasing");
        t_.push_back(t);
        for (std::size_t i = 0; i < values.size(); ++i) data_[i].push_back(values[i]);
    }

    std::size_t size() const { return t_.size(); }
    const std::vector<double>& times() const { return t_; }
    const std::vector<std::string>& channel_names() const { return names_; }

    bool has_channel(const std::string& name) const {
        return std::find(names_.begin(), names_.end(), name) != names_.end();
    }

    const std::vector<double>& channel(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return data_[i];
        throw std::out_of_range("TimeSeries: no channel named '" + name + "'");
    }

  private:
    std::vector<std::string> names_;
    std::vector<std::vector<double>> data_;
    std::vector<double> t_;
};

} // namespace dicke
