#ifndef RESONEST_TOOLS_CONFIG_JSON_HPP
#define RESONEST_TOOLS_CONFIG_JSON_HPP

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <istream>
#include <string>
#include <vector>

namespace resonest::cli {

// JSON config files for CLI11. Objects nest by subcommand name, so
// {"extract-k": {"f0": 3.65e9}} sets --f0 of `extract-k`.
class ConfigJson : public CLI::Config
{
public:
    std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const override
    {
        nlohmann::json j = nlohmann::json::object();
        for (const CLI::Option* opt : app->get_options({})) {
            if (opt->get_lnames().empty() || !opt->get_configurable())
                continue;
            const std::string name = opt->get_lnames()[0];
            if (opt->count() > 0) {
                const auto& results = opt->results();
                j[name] = results.size() == 1 ? nlohmann::json(results[0]) : nlohmann::json(results);
            } else if (default_also && !opt->get_default_str().empty()) {
                j[name] = opt->get_default_str();
            }
        }
        for (const CLI::App* sub : app->get_subcommands({})) {
            const auto nested = nlohmann::json::parse(to_config(sub, default_also, false, ""));
            if (!nested.empty())
                j[sub->get_name()] = nested;
        }
        return j.dump(2);
    }

    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override
    {
        nlohmann::json j;
        try {
            input >> j;
        } catch (const nlohmann::json::exception& e) {
            throw CLI::ConversionError(std::string("config is not valid JSON: ") + e.what());
        }
        if (!j.is_object())
            throw CLI::ConversionError("config must be a JSON object");
        std::vector<CLI::ConfigItem> items;
        collect(j, {}, items);
        return items;
    }

private:
    static std::string scalar(const nlohmann::json& v, const std::string& name)
    {
        if (v.is_boolean())
            return v.get<bool>() ? "true" : "false";
        if (v.is_string())
            return v.get<std::string>();
        if (v.is_number_float()) {
            const double d = v.get<double>();
            if (std::floor(d) == d && std::abs(d) < 1e15)
                return std::to_string(static_cast<long long>(d));
            return v.dump();
        }
        if (v.is_number())
            return v.dump();
        throw CLI::ConversionError("config value for '" + name + "' must be a scalar or a list of scalars");
    }

    static void collect(const nlohmann::json& j, const std::vector<std::string>& parents,
                        std::vector<CLI::ConfigItem>& items)
    {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it->is_object()) {
                auto nested = parents;
                nested.push_back(it.key());
                collect(*it, nested, items);
                continue;
            }
            CLI::ConfigItem item;
            item.parents = parents;
            item.name = it.key();
            if (it->is_array()) {
                for (const auto& v : *it)
                    item.inputs.push_back(scalar(v, it.key()));
            } else {
                item.inputs.push_back(scalar(*it, it.key()));
            }
            items.push_back(std::move(item));
        }
    }
};

} // namespace resonest::cli

#endif
