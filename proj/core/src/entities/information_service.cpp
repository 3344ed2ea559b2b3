#include "nimbus/entities/information_service.hpp"

#include <algorithm>
#include <string>

#include "nimbus/entities/messages.hpp"

namespace nimbus {

void CloudInformationService::register_datacenter(EntityId dc) {
    if (std::find(providers_.begin(), providers_.end(), dc) != providers_.end()) {
        sim().warn("duplicate registration of datacenter " + std::to_string(dc.value) + " ignored");
        return;
    }
    providers_.push_back(dc);
}

void CloudInformationService::process(const Event& ev) {
    switch (ev.tag) {
        case Tag::Register: register_datacenter(ev.src); break;
        case Tag::QueryProviders:
            sim().schedule(0.0, id(), ev.src, Tag::ProviderList, ProviderList{providers_});
            break;
        default:
            sim().warn("information service ignored " + std::string(to_string(ev.tag)));
            break;
    }
}

}  // namespace nimbus
