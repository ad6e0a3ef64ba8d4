#include "peakon/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace peakon {

std::string format_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string run_status_name(RunStatus status) {
    switch (status) {
    case RunStatus::ReachedHorizon:
        return "ReachedHorizon";
    case RunStatus::CollisionStop:
        return "CollisionStop";
    default:
        return "StepFailure";
    }
}

RunStatus run_status_from_name(const std::string& name) {
    if (name == "ReachedHorizon")
        return RunStatus::ReachedHorizon;
    if (name == "CollisionStop")
        return RunStatus::CollisionStop;
    if (name == "StepFailure")
        return RunStatus::StepFailure;
    throw Error("unknown run status: " + name);
}

void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory) {
    const int n = trajectory.samples.front().state.size();
    os << "# status " << run_status_name(trajectory.status) << "\n";
    os << "t";
    for (int i = 1; i <= n; ++i)
        os << ",q" << i;
    for (int i = 1; i <= n; ++i)
        os << ",p" << i;
    os << ",H0,H1";
    if (n == 3)
        os << ",H2";
    os << "\n";
    for (const Sample& s : trajectory.samples) {
        os << format_real(s.t);
        for (double qi : s.state.q())
            os << ',' << format_real(qi);
        for (double pi : s.state.p())
            os << ',' << format_real(pi);
        os << ',' << format_real(s.invariants.h0) << ',' << format_real(s.invariants.h1);
        if (n == 3)
            os << ',' << format_real(s.invariants.h2.value());
        os << "\n";
    }
    for (const CollisionEvent& e : trajectory.events) {
        os << "# event " << format_real(e.t_lo) << ' ' << format_real(e.t_hi) << ' '
           << e.pair;
        for (double qi : e.point)
            os << ' ' << format_real(qi);
        os << "\n";
    }
    const DriftReport drift = invariant_drift(trajectory);
    os << "# drift " << format_real(drift.h0) << ' ' << format_real(drift.h1);
    if (drift.h2)
        os << ' ' << format_real(*drift.h2);
    os << "\n";
}

Trajectory read_trajectory_csv(std::istream& is) {
    Trajectory out;
    std::string line;
    int n = 0;
    bool have_header = false;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        if (line.rfind("# status ", 0) == 0) {
            out.status = run_status_from_name(line.substr(9));
            continue;
        }
        if (line.rfind("# event ", 0) == 0) {
            std::istringstream ss(line.substr(8));
            CollisionEvent e;
            ss >> e.t_lo >> e.t_hi >> e.pair;
            double qi;
            while (ss >> qi)
                e.point.push_back(qi);
            out.events.push_back(std::move(e));
            continue;
        }
        if (line.rfind("# drift", 0) == 0)
            continue; // derived, recomputed on demand
        if (line.rfind("#", 0) == 0)
            continue;
        if (!have_header) {
            // column count is 1 + 2n + 2 for n in {1, 2} and 10 for n = 3
            int commas = 0;
            for (char ch : line)
                if (ch == ',')
                    ++commas;
            switch (commas) {
            case 4:
                n = 1;
                break;
            case 6:
                n = 2;
                break;
            case 9:
                n = 3;
                break;
            default:
                throw Error("trajectory CSV: unrecognized header layout");
            }
            have_header = true;
            continue;
        }
        std::istringstream ss(line);
        std::string field;
        std::vector<double> vals;
        while (std::getline(ss, field, ','))
            vals.push_back(std::strtod(field.c_str(), nullptr));
        if (static_cast<int>(vals.size()) < 1 + 2 * n + 2)
            throw Error("trajectory CSV: short row");
        std::vector<double> q(vals.begin() + 1, vals.begin() + 1 + n);
        std::vector<double> p(vals.begin() + 1 + n, vals.begin() + 1 + 2 * n);
        PeakonState state(std::move(q), std::move(p));
        InvariantVector inv;
        inv.h0 = vals[static_cast<std::size_t>(1 + 2 * n)];
        inv.h1 = vals[static_cast<std::size_t>(2 + 2 * n)];
        if (n == 3)
            inv.h2 = vals[static_cast<std::size_t>(3 + 2 * n)];
        if (n >= 2)
            inv.hhat = hhat(state);
        out.samples.push_back(Sample{vals[0], std::move(state), inv});
    }
    if (out.samples.empty())
        throw Error("trajectory CSV: no samples");
    return out;
}

nlohmann::json trajectory_json(const Trajectory& trajectory) {
    nlohmann::json j;
    j["n"] = trajectory.samples.front().state.size();
    j["status"] = run_status_name(trajectory.status);
    nlohmann::json samples = nlohmann::json::array();
    for (const Sample& s : trajectory.samples) {
        nlohmann::json row;
        row["t"] = s.t;
        row["q"] = s.state.q();
        row["p"] = s.state.p();
        row["h0"] = s.invariants.h0;
        row["h1"] = s.invariants.h1;
        if (s.invariants.h2)
            row["h2"] = *s.invariants.h2;
        samples.push_back(std::move(row));
    }
    j["samples"] = std::move(samples);
    nlohmann::json events = nlohmann::json::array();
    for (const CollisionEvent& e : trajectory.events)
        events.push_back({{"t_lo", e.t_lo}, {"t_hi", e.t_hi}, {"pair", e.pair},
                          {"point", e.point}});
    j["events"] = std::move(events);
    j["drift"] = drift_json(invariant_drift(trajectory));
    return j;
}

Trajectory trajectory_from_json(const nlohmann::json& j) {
    Trajectory out;
    out.status = run_status_from_name(j.at("status").get<std::string>());
    for (const auto& row : j.at("samples")) {
        PeakonState state(row.at("q").get<std::vector<double>>(),
                          row.at("p").get<std::vector<double>>());
        InvariantVector inv;
        inv.h0 = row.at("h0").get<double>();
        inv.h1 = row.at("h1").get<double>();
        if (row.contains("h2"))
            inv.h2 = row.at("h2").get<double>();
        if (state.size() >= 2)
            inv.hhat = hhat(state);
        out.samples.push_back(Sample{row.at("t").get<double>(), std::move(state), inv});
    }
    for (const auto& ev : j.at("events")) {
        CollisionEvent e;
        e.t_lo = ev.at("t_lo").get<double>();
        e.t_hi = ev.at("t_hi").get<double>();
        e.pair = ev.at("pair").get<int>();
        e.point = ev.at("point").get<std::vector<double>>();
        out.events.push_back(std::move(e));
    }
    return out;
}

nlohmann::json verdict_json(const Verdict& verdict) {
    nlohmann::json j;
    j["outcome"] = to_string(verdict.outcome);
    if (verdict.bound_time)
        j["bound_time"] = *verdict.bound_time;
    if (verdict.condition_fired)
        j["condition_fired"] = *verdict.condition_fired == 1 ? "cond3D1" : "cond3D2";
    j["h"] = verdict.h;
    j["a_sq"] = verdict.a_sq;
    j["hhat"] = verdict.hhat;
    j["signs"] = verdict.signs;
    return j;
}

Verdict verdict_from_json(const nlohmann::json& j) {
    Verdict v;
    const std::string outcome = j.at("outcome").get<std::string>();
    if (outcome == "Collides")
        v.outcome = Outcome::Collides;
    else if (outcome == "Escapes")
        v.outcome = Outcome::Escapes;
    else if (outcome == "PossibleCollision")
        v.outcome = Outcome::PossibleCollision;
    else
        throw Error("unknown verdict outcome: " + outcome);
    if (j.contains("bound_time"))
        v.bound_time = j.at("bound_time").get<double>();
    if (j.contains("condition_fired"))
        v.condition_fired = j.at("condition_fired").get<std::string>() == "cond3D1" ? 1 : 2;
    v.h = j.at("h").get<double>();
    v.a_sq = j.at("a_sq").get<double>();
    v.hhat = j.at("hhat").get<double>();
    v.signs = j.at("signs").get<std::vector<int>>();
    return v;
}

nlohmann::json drift_json(const DriftReport& drift) {
    nlohmann::json j;
    j["h0"] = drift.h0;
    j["h1"] = drift.h1;
    if (drift.h2)
        j["h2"] = *drift.h2;
    return j;
}

} // namespace peakon
