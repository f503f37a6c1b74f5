#include "sgbal/edgelist.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <unordered_map>
#include <unordered_set>

namespace sgbal {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

double parse_weight(const std::string& token, int line_no) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && token[0] == '+') ++first; // from_chars rejects '+'
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        fail(line_no, "cannot parse weight '" + token + "'");
    if (!std::isfinite(value) || value == 0.0 || std::abs(value) > 1.0)
        fail(line_no, "weight '" + token + "' outside [-1,1] \\ {0}");
    return value;
}

} // namespace

SignedGraph load_graph(const std::string& text, std::string name) {
    std::unordered_map<std::string, int> id_of;
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen_pairs;

    const auto intern = [&](const std::string& label) {
        auto [it, inserted] = id_of.emplace(label, static_cast<int>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };

    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string u_label, v_label, w_token, extra;
        if (!(fields >> u_label)) continue; // blank or comment-only line
        if (!(fields >> v_label >> w_token))
            fail(line_no, "expected '<u> <v> <w>'");
        if (fields >> extra)
            fail(line_no, "unexpected trailing field '" + extra + "'");

        const int u = intern(u_label);
        const int v = intern(v_label);
        if (u == v) fail(line_no, "self-loop on '" + u_label + "'");
        const double w = parse_weight(w_token, line_no);

        const auto a = static_cast<std::uint64_t>(std::min(u, v));
        const auto b = static_cast<std::uint64_t>(std::max(u, v));
        if (!seen_pairs.insert((a << 32) | b).second)
            fail(line_no, "duplicate edge '" + u_label + " " + v_label + "'");
        edges.push_back({u, v, w < 0.0 ? -1 : +1, w});
    }
    const int n = static_cast<int>(labels.size()); // before the move below empties labels
    return SignedGraph(n, std::move(edges), std::move(name), std::move(labels));
}

SignedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return load_graph(buffer.str(), path);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::string write_graph(const SignedGraph& g) {
    std::string out;
    char buf[64];
    for (const Edge& e : g.edges()) {
        out += g.labels()[static_cast<std::size_t>(e.u)];
        out += ' ';
        out += g.labels()[static_cast<std::size_t>(e.v)];
        out += ' ';
        if (e.weight == 1.0) {
            out += "+1";
        } else if (e.weight == -1.0) {
            out += "-1";
        } else {
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), e.weight);
            if (ec != std::errc()) throw std::runtime_error("weight formatting failed");
            out.append(buf, ptr);
        }
        out += '\n';
    }
    return out;
}

} // namespace sgbal
