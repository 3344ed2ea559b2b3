#pragma once

#include <optional>
#include <vector>

#include "nimbus/entities/vm.hpp"
#include "nimbus/kernel/event.hpp"

namespace nimbus {

// Payloads carried by kernel events between cloud entities.

struct ProviderList {
    std::vector<EntityId> providers;
};

struct VmCreateAck {
    Vm vm;
    EntityId datacenter;
    std::optional<int> host;

    bool created() const { return host.has_value(); }
};

struct VmRef {
    int vm_id = 0;
};

}  // namespace nimbus
