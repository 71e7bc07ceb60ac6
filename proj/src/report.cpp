#include "unispecht/report.hpp"

#include <charconv>

#include "unispecht/errors.hpp"
#include "unispecht/version.hpp"

namespace unispecht {

namespace {

nlohmann::json partition_to_json(const Partition& p) {
    return nlohmann::json(p.parts());
}

Partition partition_from_json(const nlohmann::json& j) {
    std::vector<unsigned> parts;
    for (const auto& x : j)
        parts.push_back(x.get<unsigned>());
    return Partition(std::move(parts));
}

nlohmann::json dimension_to_json(const mpz_class& d) {
    if (d.fits_ulong_p())
        return nlohmann::json(static_cast<std::uint64_t>(d.get_ui()));
    return nlohmann::json(d.get_str());
}

mpz_class dimension_from_json(const nlohmann::json& j) {
    if (j.is_string())
        return mpz_class(j.get<std::string>());
    return mpz_class(nlohmann::to_string(j));
}

} // namespace

nlohmann::json verdict_to_json(const UnisingularVerdict& v) {
    nlohmann::json off = nlohmann::json::array();
    for (const Partition& mu : v.offending)
        off.push_back(partition_to_json(mu));
    return {{"lambda", partition_to_json(v.lambda)},
            {"dimension", dimension_to_json(v.dimension)},
            {"unisingular", v.unisingular},
            {"offending", off}};
}

UnisingularVerdict verdict_from_json(const nlohmann::json& j) {
    UnisingularVerdict v;
    v.lambda = partition_from_json(j.at("lambda"));
    v.dimension = dimension_from_json(j.at("dimension"));
    v.unisingular = j.at("unisingular").get<bool>();
    for (const auto& mu : j.at("offending"))
        v.offending.push_back(partition_from_json(mu));
    return v;
}

nlohmann::json to_json(const ScanReport& report) {
    nlohmann::json verdicts = nlohmann::json::array();
    for (const UnisingularVerdict& v : report.verdicts)
        verdicts.push_back(verdict_to_json(v));
    return {{"version", kFormatVersion},
            {"n", report.n},
            {"partition_count", report.partition_count},
            {"unisingular_count", report.unisingular_count},
            {"verdicts", verdicts}};
}

nlohmann::json to_json(const std::vector<ScanReport>& reports) {
    nlohmann::json out = nlohmann::json::array();
    for (const ScanReport& r : reports)
        out.push_back(to_json(r));
    return out;
}

ScanReport scan_report_from_json(const nlohmann::json& j) {
    if (j.at("version").get<std::string>() != kFormatVersion)
        throw argument_error("scan_report_from_json: unknown format version");
    ScanReport report;
    report.n = j.at("n").get<unsigned>();
    report.partition_count = j.at("partition_count").get<std::uint64_t>();
    report.unisingular_count = j.at("unisingular_count").get<std::uint64_t>();
    for (const auto& vj : j.at("verdicts"))
        report.verdicts.push_back(verdict_from_json(vj));
    for (std::size_t i = 0; i < report.verdicts.size(); ++i)
        if (!report.verdicts[i].unisingular &&
            !family_nonunisingular(report.n, report.verdicts[i].lambda))
            report.exceptional.push_back(i);
    return report;
}

std::vector<ScanReport> scan_reports_from_json(const nlohmann::json& j) {
    std::vector<ScanReport> out;
    for (const auto& r : j)
        out.push_back(scan_report_from_json(r));
    return out;
}

std::string to_markdown(const std::vector<ScanReport>& reports) {
    std::string out = "| n | P(n) | unisingular | exceptional lambda | offending mu |\n"
                      "|---:|---:|---:|:---|:---|\n";
    for (const ScanReport& r : reports) {
        bool first = true;
        auto prefix = [&]() -> std::string {
            if (first) {
                first = false;
                return "| " + std::to_string(r.n) + " | " + std::to_string(r.partition_count) +
                       " | " + std::to_string(r.unisingular_count) + " | ";
            }
            return "|  |  |  | ";
        };
        if (r.exceptional.empty()) {
            out += prefix() + " |  |\n";
            continue;
        }
        for (std::size_t idx : r.exceptional) {
            const UnisingularVerdict& v = r.verdicts[idx];
            std::string offending;
            for (const Partition& mu : v.offending) {
                if (!offending.empty())
                    offending += ' ';
                offending += mu.str();
            }
            out += prefix() + v.lambda.str() + " | " + offending + " |\n";
        }
    }
    return out;
}

std::string to_csv(const std::vector<ScanReport>& reports) {
    std::string out = "n,lambda,dimension,unisingular,offending\n";
    for (const ScanReport& r : reports)
        for (const UnisingularVerdict& v : r.verdicts) {
            std::string offending;
            for (const Partition& mu : v.offending) {
                if (!offending.empty())
                    offending += ' ';
                offending += mu.str();
            }
            out += std::to_string(r.n) + ",\"" + v.lambda.str() + "\"," + v.dimension.get_str() +
                   "," + (v.unisingular ? "true" : "false") + ",\"" + offending + "\"\n";
        }
    return out;
}

Partition parse_partition(const std::string& text) {
    std::vector<unsigned> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string token = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        auto bad = [&] { throw argument_error("bad partition literal near '" + token + "'"); };
        std::size_t caret = token.find('^');
        std::string part_s = token.substr(0, caret);
        std::string rep_s = caret == std::string::npos ? "1" : token.substr(caret + 1);
        unsigned part = 0, rep = 0;
        auto [p1, e1] = std::from_chars(part_s.data(), part_s.data() + part_s.size(), part);
        auto [p2, e2] = std::from_chars(rep_s.data(), rep_s.data() + rep_s.size(), rep);
        if (e1 != std::errc{} || e2 != std::errc{} || p1 != part_s.data() + part_s.size() ||
            p2 != rep_s.data() + rep_s.size() || part == 0 || rep == 0)
            bad();
        parts.insert(parts.end(), rep, part);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    if (parts.empty())
        throw argument_error("bad partition literal: empty");
    return Partition(std::move(parts));
}

} // namespace unispecht
