#pragma once

#include <string>

namespace nimbus {

/// Prices charged by a datacenter, in currency units.
struct PriceVector {
    double per_cpu_second = 0.0;
    double per_mem_unit = 0.0;
    double per_storage_unit = 0.0;
    double per_bw_unit = 0.0;

    PriceVector scaled(double k) const {
        return {per_cpu_second * k, per_mem_unit * k, per_storage_unit * k, per_bw_unit * k};
    }

    bool operator==(const PriceVector&) const = default;
};

struct DatacenterCharacteristics {
    std::string arch = "x86";
    std::string os = "Windows";
    std::string vmm = "Xen";
    double time_zone = 10.0;
    PriceVector prices;

    bool operator==(const DatacenterCharacteristics&) const = default;
};

}  // namespace nimbus
