#include "brauer/report.hpp"

#include <iomanip>
#include <sstream>

namespace brauer {

Json diagram_json(const Diagram& d)
{
    Json out = Json::array();
    for (auto [i, j] : d.pairs()) out.push_back({i, j});
    return out;
}

namespace {

template <class C>
Json element_json(const Element<C>& a)
{
    Json out = Json::array();
    for (auto& [d, c] : a.canonical_terms()) {
        std::string s;
        if constexpr (std::is_same_v<C, Int>)
            s = c.get_str();
        else
            s = c.str();
        out.push_back({{"diagram", diagram_json(d)}, {"coeff", s}});
    }
    return out;
}

}  // namespace

Json murphy_json(const MurphyBasis& b)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < b.size(); ++i) {
        auto& e = b.entry(int(i));
        out.push_back({{"vertex", b.vertices()[e.vertex].str()},
                       {"s", e.s},
                       {"t", e.t},
                       {"element", element_json(b.element(int(i)))}});
    }
    return out;
}

Json split_json(const SplitBasis& sb)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < sb.size(); ++i) {
        auto& e = sb.entry(i);
        out.push_back({{"vertex", sb.murphy().vertices()[e.vertex].str()},
                       {"s", e.s},
                       {"t", e.t},
                       {"kernel", e.kernel},
                       {"element", element_json(sb.element(i))}});
    }
    return out;
}

Json certificate_json(const Certificate& c)
{
    Json params = Json::object();
    for (auto& [k, v] : c.params) params[k] = v;
    Json checks = Json::array();
    for (auto& ch : c.checks)
        checks.push_back({{"name", ch.name}, {"expected", ch.expected}, {"got", ch.got}, {"pass", ch.pass}});
    return {{"params", params}, {"checks", checks}, {"notes", c.notes}, {"passed", c.passed()}};
}

std::string certificate_table(const Certificate& c)
{
    std::ostringstream os;
    for (auto& [k, v] : c.params) os << k << " = " << v << "\n";
    for (auto& ch : c.checks)
        os << (ch.pass ? "PASS " : "FAIL ") << ch.name << ": " << ch.got
           << (ch.pass ? "" : " (expected " + ch.expected + ")") << "\n";
    for (auto& n : c.notes) os << "note: " << n << "\n";
    os << (c.passed() ? "certificate passed" : "certificate FAILED") << "\n";
    return os.str();
}

Json dims_json(const std::vector<DimsRow>& rows)
{
    Json out = Json::array();
    for (auto& row : rows) {
        Json paths = Json::object();
        for (auto& [v, n] : row.permissible_paths) paths[v.str()] = n;
        Json j = {{"r", row.r}, {"algebra_dim", row.algebra_dim}, {"permissible_sum", row.permissible_sum}};
        j["image_rank"] = row.image_rank < 0 ? Json(nullptr) : Json(row.image_rank);
        j["permissible_paths"] = paths;
        out.push_back(j);
    }
    return out;
}

std::string dims_table_text(const std::vector<DimsRow>& rows)
{
    std::ostringstream os;
    os << std::setw(3) << "r" << std::setw(12) << "dim" << std::setw(12) << "sum perm^2" << std::setw(12) << "rank"
       << "  permissible paths\n";
    for (auto& row : rows) {
        os << std::setw(3) << row.r << std::setw(12) << row.algebra_dim << std::setw(12) << row.permissible_sum
           << std::setw(12) << (row.image_rank < 0 ? std::string("-") : std::to_string(row.image_rank)) << " ";
        for (auto& [v, n] : row.permissible_paths) os << " " << v.str() << ":" << n;
        os << "\n";
    }
    return os.str();
}

std::string basis_table(const Json& basis)
{
    std::ostringstream os;
    for (auto& e : basis) {
        os << e["vertex"].get<std::string>() << " " << e["s"].get<int>() << " " << e["t"].get<int>();
        if (e.contains("kernel")) os << (e["kernel"].get<bool>() ? " ker" : " im ");
        os << " :";
        bool first = true;
        for (auto& term : e["element"]) {
            std::string c = term["coeff"].get<std::string>();
            os << (first ? " " : " + ") << "(" << c << ")[";
            bool sep = false;
            for (auto& p : term["diagram"]) {
                os << (sep ? " " : "") << p[0].get<int>() << "-" << p[1].get<int>();
                sep = true;
            }
            os << "]";
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace brauer
