#include "isolation/harness/report.hpp"

#include <numeric>
#include <sstream>

namespace isolation::harness {

auto RunReport::to_json() const -> nlohmann::json
{
    nlohmann::json out;
    out["command"] = command;
    out["inputs"] = inputs;
    out["records"] = records;
    out["aggregate"] = aggregate;
    return out;
}

auto RunReport::to_text() const -> std::string
{
    std::ostringstream out;
    for (const auto & line : lines)
        out << line << '\n';
    return out.str();
}

auto Ratio::reduced() const -> Ratio
{
    const long long g = std::gcd(num, den);
    return g == 0 ? *this : Ratio{num / g, den / g};
}

auto Ratio::str() const -> std::string
{
    return std::to_string(num) + "/" + std::to_string(den);
}

auto Ratio::json() const -> nlohmann::json
{
    return nlohmann::json::array({num, den});
}

} // namespace isolation::harness
