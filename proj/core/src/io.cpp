#include "redsim/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace redsim {

namespace {

void append_header(std::string& out, const AgentModel& model) {
    out += "time";
    for (StateLabel s : model.state_set()) {
        out += ',';
        out += model.state_name(s);
    }
    out += '\n';
}

void append_fixed6(std::string& out, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    out += buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
}

} // namespace

std::string trajectory_csv(const Trajectory& trajectory, const AgentModel& model) {
    std::string out;
    append_header(out, model);
    for (std::size_t i = 0; i < trajectory.times.size(); ++i) {
        append_fixed6(out, trajectory.times[i]);
        for (std::uint32_t count : trajectory.counts[i]) {
            out += ',';
            out += std::to_string(count);
        }
        out += '\n';
    }
    return out;
}

void write_trajectory_csv(const std::filesystem::path& path,
                          const Trajectory& trajectory, const AgentModel& model) {
    write_file(path, trajectory_csv(trajectory, model));
}

std::string mean_trajectory_csv(std::span<const Trajectory> trajectories,
                                const AgentModel& model) {
    if (trajectories.empty())
        throw std::invalid_argument("mean_trajectory_csv: no trajectories");
    const Trajectory& first = trajectories.front();
    for (const Trajectory& t : trajectories)
        if (t.times != first.times)
            throw std::invalid_argument("mean_trajectory_csv: mismatched grids");

    std::string out;
    append_header(out, model);
    const double reps = static_cast<double>(trajectories.size());
    for (std::size_t i = 0; i < first.times.size(); ++i) {
        append_fixed6(out, first.times[i]);
        for (std::size_t s = 0; s < model.state_count(); ++s) {
            double sum = 0.0;
            for (const Trajectory& t : trajectories)
                sum += t.counts[i][s];
            out += ',';
            append_fixed6(out, sum / reps);
        }
        out += '\n';
    }
    return out;
}

void write_mean_trajectory_csv(const std::filesystem::path& path,
                               std::span<const Trajectory> trajectories,
                               const AgentModel& model) {
    write_file(path, mean_trajectory_csv(trajectories, model));
}

} // namespace redsim
