#include "fintop/docio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace fintop {

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

namespace {

std::string set_suffix(PointSet s) {
    std::string out;
    for (Point x : s.points()) {
        out += ' ';
        out += std::to_string(x);
    }
    return out;
}

std::string index_suffix(const std::vector<int>& v) {
    std::string out;
    for (int x : v) {
        out += ' ';
        out += std::to_string(x);
    }
    return out;
}

std::string space_payload(const FiniteSpace& space) {
    std::string out = "points " + std::to_string(space.point_count()) + "\n";
    for (PointSet o : space.opens()) out += "open" + set_suffix(o) + "\n";
    return out;
}

struct Line {
    int number;
    std::string raw;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    int number = 0;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        Line line{number, raw, {}};
        std::istringstream ls(raw);
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

// Raw text after the token at `token_index`, with surrounding space trimmed.
std::string rest_of_line(const Line& line, std::size_t token_index) {
    std::size_t pos = 0;
    for (std::size_t t = 0; t <= token_index; ++t) {
        while (pos < line.raw.size() && std::isspace(static_cast<unsigned char>(line.raw[pos])))
            ++pos;
        while (pos < line.raw.size() && !std::isspace(static_cast<unsigned char>(line.raw[pos])))
            ++pos;
    }
    while (pos < line.raw.size() && std::isspace(static_cast<unsigned char>(line.raw[pos])))
        ++pos;
    std::size_t last = line.raw.find_last_not_of(" \t");
    return last == std::string::npos || last < pos
               ? std::string()
               : line.raw.substr(pos, last - pos + 1);
}

int parse_int(const Line& line, const std::string& tok, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw parse_error(line.number, std::string("bad ") + what + " '" + tok + "'");
    return value;
}

// Tokens from `from` onward as a sorted point set.
PointSet parse_set(const Line& line, std::size_t from, int n) {
    PointSet s;
    int prev = -1;
    for (std::size_t i = from; i < line.tokens.size(); ++i) {
        int x = parse_int(line, line.tokens[i], "point index");
        if (x <= prev)
            throw parse_error(line.number, "indices must be strictly increasing");
        if (x >= n)
            throw parse_error(line.number, "point index " + std::to_string(x) +
                                               " outside a " + std::to_string(n) +
                                               "-point space");
        s = s.with(x);
        prev = x;
    }
    return s;
}

std::vector<int> parse_index_list(const Line& line, std::size_t from, int limit,
                                  const char* what) {
    std::vector<int> v;
    int prev = -1;
    for (std::size_t i = from; i < line.tokens.size(); ++i) {
        int x = parse_int(line, line.tokens[i], what);
        if (x <= prev)
            throw parse_error(line.number, "indices must be strictly increasing");
        if (x >= limit)
            throw parse_error(line.number, std::string(what) + " " + std::to_string(x) +
                                               " out of range");
        v.push_back(x);
        prev = x;
    }
    return v;
}

struct Doc {
    std::string type;
    std::vector<Line> body; // between header and end
};

Doc open_doc(const std::string& text, const char* expected_type) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw parse_error(0, "empty document");
    const Line& head = lines.front();
    if (head.tokens.size() != 3 || head.tokens[0] != "fintop" || head.tokens[2] != "v1")
        throw parse_error(head.number, "expected header 'fintop <type> v1'");
    if (head.tokens[1] != expected_type)
        throw parse_error(head.number, "document type '" + head.tokens[1] +
                                           "' where '" + expected_type + "' was needed");
    const Line& tail = lines.back();
    if (tail.tokens.size() != 1 || tail.tokens[0] != "end")
        throw parse_error(tail.number, "document must close with 'end'");
    return Doc{head.tokens[1], {lines.begin() + 1, lines.end() - 1}};
}

[[noreturn]] void unknown_directive(const Line& line) {
    throw parse_error(line.number, "unknown directive '" + line.tokens[0] + "'");
}

void check_space_hash(const Line& line, const FiniteSpace& space) {
    if (line.tokens.size() != 2)
        throw parse_error(line.number, "space-hash takes one value");
    if (line.tokens[1] != space_hash(space))
        throw parse_error(line.number, "space hash " + line.tokens[1] +
                                           " does not match the given space (" +
                                           space_hash(space) + ")");
}

} // namespace

std::string space_hash(const FiniteSpace& space) {
    std::uint64_t h = fnv1a64(space_payload(space));
    char buf[17];
    static const char* digits = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = digits[h & 0xf];
        h >>= 4;
    }
    buf[16] = '\0';
    return buf;
}

std::string save_space(const FiniteSpace& space, const std::optional<std::string>& name,
                       const std::vector<std::string>& unknown_lines) {
    std::string out = "fintop space v1\n";
    if (name) out += "name " + *name + "\n";
    out += space_payload(space);
    for (const std::string& raw : unknown_lines) out += raw + "\n";
    out += "end\n";
    return out;
}

SpaceDoc load_space(const std::string& text, ParseMode mode, bool auto_close) {
    Doc doc = open_doc(text, "space");
    std::optional<int> points;
    std::optional<std::string> name;
    std::vector<PointSet> opens;
    std::vector<std::string> unknown;
    int first_open_line = 0;

    for (const Line& line : doc.body) {
        const std::string& key = line.tokens[0];
        if (key == "points") {
            if (points) throw parse_error(line.number, "duplicate points directive");
            if (line.tokens.size() != 2)
                throw parse_error(line.number, "points takes one value");
            int n = parse_int(line, line.tokens[1], "point count");
            if (n < 1 || n > 20)
                throw parse_error(line.number, "point count must be 1..20");
            points = n;
        } else if (key == "open") {
            if (!points)
                throw parse_error(line.number, "open before points");
            if (!first_open_line) first_open_line = line.number;
            opens.push_back(parse_set(line, 1, *points));
        } else if (key == "name") {
            if (line.tokens.size() < 2)
                throw parse_error(line.number, "name needs a value");
            name = rest_of_line(line, 0);
        } else if (mode == ParseMode::strict) {
            unknown_directive(line);
        } else {
            unknown.push_back(line.raw);
        }
    }
    if (!points) throw parse_error(0, "document has no points directive");

    for (std::size_t i = 0; i < opens.size(); ++i)
        for (std::size_t j = i + 1; j < opens.size(); ++j)
            if (opens[i] == opens[j])
                throw parse_error(first_open_line,
                                  "duplicate open " + opens[i].to_string());
    bool closed = false;
    try {
        FiniteSpace space = FiniteSpace::from_opens(*points, opens);
        return SpaceDoc{std::move(space), std::move(name), false, std::move(unknown)};
    } catch (const input_error& e) {
        if (!auto_close) throw parse_error(first_open_line, e.what());
        closed = true;
    }
    FiniteSpace space = FiniteSpace::from_generators(*points, opens, nullptr);
    return SpaceDoc{std::move(space), std::move(name), closed, std::move(unknown)};
}

std::string save_family(const SetFamily& family) {
    std::string out = "fintop family v1\n";
    out += "space-hash " + space_hash(family.space()) + "\n";
    out += std::string("role ") + role_name(family.role()) + "\n";
    for (PointSet m : family.members()) out += "member" + set_suffix(m) + "\n";
    out += "end\n";
    return out;
}

SetFamily load_family(const std::string& text, const FiniteSpace& space,
                      ParseMode mode) {
    Doc doc = open_doc(text, "family");
    std::optional<FamilyRole> role;
    std::vector<PointSet> members;
    int role_line = 0;
    bool hash_seen = false;

    for (const Line& line : doc.body) {
        const std::string& key = line.tokens[0];
        if (key == "space-hash") {
            check_space_hash(line, space);
            hash_seen = true;
        } else if (key == "role") {
            if (line.tokens.size() != 2)
                throw parse_error(line.number, "role takes one value");
            role = role_from_name(line.tokens[1]);
            if (!role)
                throw parse_error(line.number, "unknown role '" + line.tokens[1] + "'");
            role_line = line.number;
        } else if (key == "member") {
            members.push_back(parse_set(line, 1, space.point_count()));
        } else if (mode == ParseMode::strict) {
            unknown_directive(line);
        }
    }
    if (!hash_seen) throw parse_error(0, "document has no space-hash");
    if (!role) throw parse_error(0, "document has no role");
    try {
        return SetFamily(space, std::move(members), *role);
    } catch (const input_error& e) {
        throw parse_error(role_line, e.what());
    }
}

namespace {

std::string witness_prefix(const char* type, const SetFamily& family) {
    std::string out = std::string("fintop ") + type + " v1\n";
    out += "space-hash " + space_hash(family.space()) + "\n";
    out += std::string("role ") + role_name(family.role()) + "\n";
    for (PointSet m : family.members()) out += "member" + set_suffix(m) + "\n";
    return out;
}

// Shared scaffolding for fns/fn witness bodies: family directives plus
// per-member index-list directives like "s 0 : 1 2".
struct WitnessBody {
    SetFamily family;
    std::vector<std::vector<std::vector<int>>> maps; // one per requested letter
};

WitnessBody load_witness_body(const Doc& doc, const FiniteSpace& space, ParseMode mode,
                              const std::vector<std::string>& letters) {
    std::optional<FamilyRole> role;
    std::vector<PointSet> members;
    int role_line = 0;
    bool hash_seen = false;
    struct Entry {
        Line line;
        int letter;
    };
    std::vector<Entry> entries;

    for (const Line& line : doc.body) {
        const std::string& key = line.tokens[0];
        auto letter = std::find(letters.begin(), letters.end(), key);
        if (key == "space-hash") {
            check_space_hash(line, space);
            hash_seen = true;
        } else if (key == "role") {
            if (line.tokens.size() != 2)
                throw parse_error(line.number, "role takes one value");
            role = role_from_name(line.tokens[1]);
            if (!role)
                throw parse_error(line.number, "unknown role '" + line.tokens[1] + "'");
            role_line = line.number;
        } else if (key == "member") {
            members.push_back(parse_set(line, 1, space.point_count()));
        } else if (letter != letters.end()) {
            entries.push_back({line, static_cast<int>(letter - letters.begin())});
        } else if (mode == ParseMode::strict) {
            unknown_directive(line);
        }
    }
    if (!hash_seen) throw parse_error(0, "document has no space-hash");
    if (!role) throw parse_error(0, "document has no role");

    int count = static_cast<int>(members.size());
    SetFamily family = [&] {
        try {
            return SetFamily(space, std::move(members), *role);
        } catch (const input_error& e) {
            throw parse_error(role_line, e.what());
        }
    }();

    std::vector<std::vector<std::vector<int>>> maps(
        letters.size(), std::vector<std::vector<int>>(count));
    std::vector<std::vector<bool>> seen(letters.size(), std::vector<bool>(count, false));
    for (const Entry& e : entries) {
        const Line& line = e.line;
        if (line.tokens.size() < 3 || line.tokens[2] != ":")
            throw parse_error(line.number,
                              "expected '" + letters[e.letter] + " <index> : ...'");
        int idx = parse_int(line, line.tokens[1], "member index");
        if (idx < 0 || idx >= count)
            throw parse_error(line.number, "member index out of range");
        if (seen[e.letter][idx])
            throw parse_error(line.number, "duplicate " + letters[e.letter] +
                                               " entry for member " + std::to_string(idx));
        seen[e.letter][idx] = true;
        maps[e.letter][idx] = parse_index_list(line, 3, count, "member index");
    }
    for (std::size_t l = 0; l < letters.size(); ++l)
        for (int i = 0; i < count; ++i)
            if (!seen[l][i])
                throw parse_error(0, "missing " + letters[l] + " entry for member " +
                                         std::to_string(i));
    return WitnessBody{std::move(family), std::move(maps)};
}

} // namespace

std::string save_fns(const FnsWitness& w) {
    std::string out = witness_prefix("fns-witness", w.family);
    for (std::size_t i = 0; i < w.s.size(); ++i)
        out += "s " + std::to_string(i) + " :" + index_suffix(w.s[i]) + "\n";
    out += "end\n";
    return out;
}

FnsWitness load_fns(const std::string& text, const FiniteSpace& space, ParseMode mode) {
    Doc doc = open_doc(text, "fns-witness");
    WitnessBody body = load_witness_body(doc, space, mode, {"s"});
    return FnsWitness{std::move(body.family), std::move(body.maps[0])};
}

std::string save_fn(const FnWitness& w) {
    std::string out = witness_prefix("fn-witness", w.base);
    for (std::size_t i = 0; i < w.u.size(); ++i)
        out += "u " + std::to_string(i) + " :" + index_suffix(w.u[i]) + "\n";
    for (std::size_t i = 0; i < w.l.size(); ++i)
        out += "l " + std::to_string(i) + " :" + index_suffix(w.l[i]) + "\n";
    out += "end\n";
    return out;
}

FnWitness load_fn(const std::string& text, const FiniteSpace& space, ParseMode mode) {
    Doc doc = open_doc(text, "fn-witness");
    WitnessBody body = load_witness_body(doc, space, mode, {"u", "l"});
    return FnWitness{std::move(body.family), std::move(body.maps[0]),
                     std::move(body.maps[1])};
}

std::string save_transcript(const GameTranscript& t) {
    std::string out = "fintop transcript v1\n";
    out += "space-hash " + space_hash(t.space) + "\n";
    out += std::string("dense ") + (t.dense ? "true" : "false") + "\n";
    for (std::size_t n = 0; n < t.rounds.size(); ++n) {
        for (PointSet m : t.rounds[n].c.members())
            out += "round " + std::to_string(n) + " c" + set_suffix(m) + "\n";
        for (PointSet m : t.rounds[n].d.members())
            out += "round " + std::to_string(n) + " d" + set_suffix(m) + "\n";
    }
    out += "end\n";
    return out;
}

GameTranscript load_transcript(const std::string& text, const FiniteSpace& space,
                               ParseMode mode) {
    Doc doc = open_doc(text, "transcript");
    std::optional<bool> dense;
    bool hash_seen = false;
    std::vector<std::pair<std::vector<PointSet>, std::vector<PointSet>>> rounds;
    int first_round_line = 0;

    for (const Line& line : doc.body) {
        const std::string& key = line.tokens[0];
        if (key == "space-hash") {
            check_space_hash(line, space);
            hash_seen = true;
        } else if (key == "dense") {
            if (line.tokens.size() != 2 ||
                (line.tokens[1] != "true" && line.tokens[1] != "false"))
                throw parse_error(line.number, "dense must be true or false");
            dense = line.tokens[1] == "true";
        } else if (key == "round") {
            if (line.tokens.size() < 3)
                throw parse_error(line.number, "expected 'round <n> c|d ...'");
            if (!first_round_line) first_round_line = line.number;
            int n = parse_int(line, line.tokens[1], "round number");
            if (n < 0 || n > 10000)
                throw parse_error(line.number, "round number out of range");
            if (static_cast<int>(rounds.size()) < n + 1) rounds.resize(n + 1);
            PointSet m = parse_set(line, 3, space.point_count());
            if (line.tokens[2] == "c")
                rounds[n].first.push_back(m);
            else if (line.tokens[2] == "d")
                rounds[n].second.push_back(m);
            else
                throw parse_error(line.number, "round side must be c or d");
        } else if (mode == ParseMode::strict) {
            unknown_directive(line);
        }
    }
    if (!hash_seen) throw parse_error(0, "document has no space-hash");
    if (!dense) throw parse_error(0, "document has no dense directive");

    GameTranscript t{space, {}, *dense};
    PointSet covered;
    for (std::size_t n = 0; n < rounds.size(); ++n) {
        if (rounds[n].first.empty())
            throw parse_error(first_round_line,
                              "round " + std::to_string(n) + " has no challenge");
        try {
            Round r{SetFamily(space, rounds[n].first, FamilyRole::plain),
                    SetFamily(space, rounds[n].second, FamilyRole::plain)};
            if (!round_legal(r))
                throw parse_error(first_round_line,
                                  "round " + std::to_string(n) + " is not legal");
            covered = covered | r.d.union_of_members();
            t.rounds.push_back(std::move(r));
        } catch (const input_error& e) {
            throw parse_error(first_round_line, e.what());
        }
    }
    if (*dense != (space.closure(covered) == space.full()))
        throw parse_error(0, "dense flag disagrees with the replies");
    return t;
}

std::string save_triple(const AbsoluteTriple& t) {
    std::string out = "fintop triple v1\n";
    auto emit_space = [&](const char* tag, const FiniteSpace& s) {
        out += std::string(tag) + "-points " + std::to_string(s.point_count()) + "\n";
        for (PointSet o : s.opens()) out += std::string(tag) + "-open" + set_suffix(o) + "\n";
    };
    emit_space("z", t.z);
    emit_space("y", t.f.target());
    emit_space("x", t.g.target());
    out += "f";
    for (Point p = 0; p < t.z.point_count(); ++p)
        out += " " + std::to_string(t.f.apply(p));
    out += "\ng";
    for (Point p = 0; p < t.z.point_count(); ++p)
        out += " " + std::to_string(t.g.apply(p));
    out += "\nend\n";
    return out;
}

AbsoluteTriple load_triple(const std::string& text, ParseMode mode) {
    Doc doc = open_doc(text, "triple");
    struct SpacePart {
        std::optional<int> points;
        std::vector<PointSet> opens;
    };
    SpacePart parts[3]; // z, y, x
    std::vector<int> f_img, g_img;
    int map_line = 0;

    auto part_index = [](const std::string& tag) -> int {
        if (tag == "z") return 0;
        if (tag == "y") return 1;
        if (tag == "x") return 2;
        return -1;
    };

    for (const Line& line : doc.body) {
        const std::string& key = line.tokens[0];
        std::size_t dash = key.find('-');
        int part = dash == std::string::npos ? -1 : part_index(key.substr(0, dash));
        if (part >= 0 && key.substr(dash + 1) == "points") {
            if (line.tokens.size() != 2)
                throw parse_error(line.number, "points takes one value");
            int n = parse_int(line, line.tokens[1], "point count");
            if (n < 1 || n > 20)
                throw parse_error(line.number, "point count must be 1..20");
            parts[part].points = n;
        } else if (part >= 0 && key.substr(dash + 1) == "open") {
            if (!parts[part].points)
                throw parse_error(line.number, "open before points");
            parts[part].opens.push_back(parse_set(line, 1, *parts[part].points));
        } else if (key == "f" || key == "g") {
            map_line = line.number;
            std::vector<int>& img = key == "f" ? f_img : g_img;
            if (!img.empty()) throw parse_error(line.number, "duplicate map " + key);
            for (std::size_t i = 1; i < line.tokens.size(); ++i)
                img.push_back(parse_int(line, line.tokens[i], "image point"));
        } else if (mode == ParseMode::strict) {
            unknown_directive(line);
        }
    }
    const char* tags[3] = {"z", "y", "x"};
    for (int i = 0; i < 3; ++i)
        if (!parts[i].points)
            throw parse_error(0, std::string("document has no ") + tags[i] + "-points");
    if (f_img.empty() || g_img.empty())
        throw parse_error(0, "document needs both f and g maps");

    try {
        FiniteSpace z = FiniteSpace::from_opens(*parts[0].points, parts[0].opens);
        FiniteSpace y = FiniteSpace::from_opens(*parts[1].points, parts[1].opens);
        FiniteSpace x = FiniteSpace::from_opens(*parts[2].points, parts[2].opens);
        SpaceMap f(z, y, f_img);
        SpaceMap g(z, x, g_img);
        return AbsoluteTriple(std::move(z), std::move(f), std::move(g));
    } catch (const input_error& e) {
        throw parse_error(map_line, e.what());
    }
}

std::string save_report(const ReportDoc& r) {
    std::string out = "fintop report v1\n";
    out += "kind " + r.kind + "\n";
    for (const auto& [key, value] : r.fields) out += "field " + key + " " + value + "\n";
    for (const std::string& f : r.findings) out += "finding " + f + "\n";
    out += "end\n";
    return out;
}

ReportDoc load_report(const std::string& text, ParseMode mode) {
    Doc doc = open_doc(text, "report");
    ReportDoc r;
    bool kind_seen = false;
    for (const Line& line : doc.body) {
        const std::string& key = line.tokens[0];
        if (key == "kind") {
            if (line.tokens.size() != 2)
                throw parse_error(line.number, "kind takes one value");
            r.kind = line.tokens[1];
            kind_seen = true;
        } else if (key == "field") {
            if (line.tokens.size() < 3)
                throw parse_error(line.number, "expected 'field <name> <value>'");
            r.fields.emplace_back(line.tokens[1], rest_of_line(line, 1));
        } else if (key == "finding") {
            if (line.tokens.size() < 2)
                throw parse_error(line.number, "finding needs text");
            r.findings.push_back(rest_of_line(line, 0));
        } else if (mode == ParseMode::strict) {
            unknown_directive(line);
        }
    }
    if (!kind_seen) throw parse_error(0, "document has no kind");
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write " + path);
    out << text;
    if (!out) throw input_error("write failed for " + path);
}

} // namespace fintop
