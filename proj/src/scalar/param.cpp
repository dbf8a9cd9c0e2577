#include "scalar/param.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace wb {

namespace {

struct Registry {
    std::mutex mutex;
    std::deque<std::string> names;
    std::unordered_map<std::string, std::uint32_t> ids;
};

Registry& registry()
{
    static Registry r;
    return r;
}

} // namespace

Param Param::intern(std::string_view name)
{
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    auto it = r.ids.find(std::string(name));
    if (it != r.ids.end())
        return Param(it->second);
    auto id = static_cast<std::uint32_t>(r.names.size());
    r.names.emplace_back(name);
    r.ids.emplace(std::string(name), id);
    return Param(id);
}

std::optional<Param> Param::find(std::string_view name)
{
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    auto it = r.ids.find(std::string(name));
    if (it == r.ids.end())
        return std::nullopt;
    return Param(it->second);
}

const std::string& Param::name() const
{
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    // deque never relocates existing elements, so the reference outlives the lock
    return r.names[id_];
}

} // namespace wb
