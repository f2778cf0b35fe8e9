#include "streamgraph/io.hpp"

#include "streamgraph/error.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace sg {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

Rational number(std::string_view token, int line) {
    try {
        return Rational::parse(token);
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::syntax, "bad number '" + std::string(token) + "'", line);
    }
}

void expect_arity(const std::vector<std::string_view>& tok, std::size_t lo, std::size_t hi, int line) {
    if (tok.size() < lo || tok.size() > hi)
        throw Error(ErrorCode::syntax, "wrong number of fields for '" + std::string(tok[0]) + "'", line);
}

}  // namespace

StreamGraph parse_stream(std::string_view text) {
    std::optional<Kind> kind;
    std::optional<StreamBuilder> builder;
    bool weighted = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        const auto tok = tokenize(line);
        if (tok.empty()) continue;
        const std::string_view op = tok[0];

        if (!kind) {
            if (op != "stream" || tok.size() < 2 || tok.size() > 3 || (tok.size() == 3 && tok[2] != "weighted"))
                throw Error(ErrorCode::syntax, "expected 'stream <kind> [weighted]'", line_no);
            kind = parse_kind(tok[1]);
            if (!kind) throw Error(ErrorCode::syntax, "unknown stream kind '" + std::string(tok[1]) + "'", line_no);
            weighted = tok.size() == 3;
            continue;
        }
        if (!builder) {
            if (op != "T" || tok.size() != 3) throw Error(ErrorCode::syntax, "expected 'T <begin> <end>'", line_no);
            const Rational b = number(tok[1], line_no);
            const Rational e = number(tok[2], line_no);
            if (e < b) throw Error(ErrorCode::reversed_interval, "reversed time horizon", line_no);
            builder.emplace(*kind, Interval{b, e});
            if (weighted) builder->mark_weighted();
            continue;
        }

        auto with_line = [&](auto&& f) {
            try {
                f();
            } catch (const Error& err) {
                throw Error(err.code(), err.what(), err.line() ? err.line() : line_no);
            }
        };
        auto check_side_declared = [&](std::string_view node) {
            if (*kind == Kind::bipartite && !builder->has_side(node))
                throw Error(ErrorCode::side_violation, "node '" + std::string(node) + "' used before its side", line_no);
        };

        if (op == "side") {
            expect_arity(tok, 3, 3, line_no);
            const auto side = parse_side(tok[2]);
            if (!side) throw Error(ErrorCode::syntax, "side must be top or bottom", line_no);
            if (builder->declared(tok[1]) && !builder->has_side(tok[1]))
                throw Error(ErrorCode::side_violation, "side of '" + std::string(tok[1]) + "' given after its first use",
                            line_no);
            with_line([&] { builder->set_side(tok[1], *side, line_no); });
        } else if (op == "N") {
            if (tok.size() != 2 && tok.size() != 4) expect_arity(tok, 4, 4, line_no);
            check_side_declared(tok[1]);
            if (tok.size() == 2) {
                with_line([&] { builder->add_node(tok[1], line_no); });
            } else {
                const Interval iv{number(tok[2], line_no), number(tok[3], line_no)};
                with_line([&] { builder->add_presence(tok[1], iv, line_no); });
            }
        } else if (op == "L" || op == "A") {
            expect_arity(tok, 5, 6, line_no);
            if ((op == "A") != (*kind == Kind::directed))
                throw Error(ErrorCode::kind_mismatch,
                            op == "A" ? "arcs 'A' need a directed stream" : "directed streams use 'A' lines", line_no);
            check_side_declared(tok[1]);
            check_side_declared(tok[2]);
            const Interval iv{number(tok[3], line_no), number(tok[4], line_no)};
            std::optional<Rational> w;
            if (tok.size() == 6) w = number(tok[5], line_no);
            with_line([&] { builder->add_link(tok[1], tok[2], iv, w, line_no); });
        } else if (op == "NW") {
            expect_arity(tok, 5, 5, line_no);
            check_side_declared(tok[1]);
            const Interval iv{number(tok[2], line_no), number(tok[3], line_no)};
            const Rational w = number(tok[4], line_no);
            with_line([&] { builder->add_node_weight(tok[1], iv, w, line_no); });
        } else {
            throw Error(ErrorCode::syntax, "unknown directive '" + std::string(op) + "'", line_no);
        }
    }
    if (!kind) throw Error(ErrorCode::syntax, "missing 'stream <kind>' header", line_no);
    if (!builder) throw Error(ErrorCode::syntax, "missing 'T <begin> <end>' line", line_no);
    return builder->build();
}

StreamGraph read_stream_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::invalid_argument, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_stream(buf.str());
}

std::string format_number(const Rational& r) { return r.to_decimal_or_fraction(); }

std::string serialize(const StreamGraph& s) {
    std::ostringstream out;
    auto interval = [&](const Interval& iv) { out << ' ' << format_number(iv.begin) << ' ' << format_number(iv.end); };
    out << "stream " << to_string(s.kind()) << (s.weighted() ? " weighted" : "") << '\n';
    out << "T";
    interval(s.horizon());
    out << '\n';
    for (NodeIndex v = 0; v < s.node_total(); ++v)
        if (auto side = s.side(v)) out << "side " << s.name(v) << ' ' << to_string(*side) << '\n';
    for (NodeIndex v = 0; v < s.node_total(); ++v) {
        if (s.presence(v).empty()) {
            out << "N " << s.name(v) << '\n';
            continue;
        }
        for (const auto& iv : s.presence(v)) {
            out << "N " << s.name(v);
            interval(iv);
            out << '\n';
        }
    }
    for (NodeIndex v = 0; v < s.node_total(); ++v)
        if (const StepWeight* w = s.node_weight(v))
            for (const auto& p : w->pieces()) {
                out << "NW " << s.name(v);
                interval(p.interval);
                out << ' ' << format_number(p.value) << '\n';
            }
    const char op = s.directed() ? 'A' : 'L';
    for (const auto& l : s.links()) {
        if (s.weighted()) {
            for (const auto& p : l.weight.pieces()) {
                out << op << ' ' << s.name(l.from) << ' ' << s.name(l.to);
                interval(p.interval);
                out << ' ' << format_number(p.value) << '\n';
            }
        } else {
            for (const auto& iv : l.presence) {
                out << op << ' ' << s.name(l.from) << ' ' << s.name(l.to);
                interval(iv);
                out << '\n';
            }
        }
    }
    return out.str();
}

}  // namespace sg
