#include "constellab/problem.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace constellab {

namespace {

[[noreturn]] void fail(const std::string& origin, std::size_t line, const std::string& message) {
    throw InputError(origin + ":" + std::to_string(line) + ": " + message);
}

std::string trim(std::string_view text) {
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return "";
    const auto end = text.find_last_not_of(" \t\r");
    return std::string(text.substr(begin, end - begin + 1));
}

std::vector<std::string> split_words(const std::string& text) {
    std::istringstream stream(text);
    std::vector<std::string> words;
    for (std::string word; stream >> word;) words.push_back(word);
    return words;
}

std::vector<std::string> split_on(const std::string& text, char separator) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == separator) {
            parts.push_back(trim(current));
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(trim(current));
    return parts;
}

/// One "key tokens = value" entry of a section.
struct Entry {
    std::size_t line = 0;
    std::vector<std::string> keys;
    std::string value;
};

struct RawSection {
    std::size_t line = 0;
    std::string name;  // "group", "subh", ...
    std::string arg;   // the NAME of [subh NAME], empty otherwise
    std::vector<Entry> entries;
};

long parse_long(const std::string& origin, std::size_t line, const std::string& token) {
    long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        fail(origin, line, "expected an integer, got '" + token + "'");
    return value;
}

Rational parse_rational_at(const std::string& origin, std::size_t line, const std::string& token) {
    try {
        return parse_rational(token);
    } catch (const InputError& e) {
        fail(origin, line, e.what());
    }
}

IrrepLabel parse_label(const std::string& origin, std::size_t line, const GroupSpec& group,
                       const std::vector<std::string>& tokens) {
    std::vector<long> entries;
    entries.reserve(tokens.size());
    for (const std::string& token : tokens) entries.push_back(parse_long(origin, line, token));
    try {
        return reduce_label(group, IrrepLabel{std::move(entries)});
    } catch (const InputError& e) {
        fail(origin, line, e.what());
    }
}

RayTail parse_tail(const std::string& origin, std::size_t line, const std::string& value) {
    const std::vector<std::string> words = split_words(value);
    try {
        if (words.size() == 1 && words[0] == "zero") return RayTail::zero();
        if (words.size() == 2 && words[0] == "constant")
            return RayTail::constant(parse_rational_at(origin, line, words[1]));
        if (words.size() == 3 && words[0] == "geometric")
            return RayTail::geometric(parse_rational_at(origin, line, words[1]),
                                      parse_rational_at(origin, line, words[2]));
    } catch (const InputError& e) {
        fail(origin, line, e.what());
    }
    fail(origin, line,
         "expected a tail: 'zero', 'constant <coeff>' or 'geometric <coeff> <base>', got '" +
             value + "'");
}

std::pair<long, long> parse_range(const std::string& origin, std::size_t line,
                                  const std::string& value) {
    const auto dots = value.find("..");
    if (dots == std::string::npos)
        fail(origin, line, "expected a range 'lo..hi', got '" + value + "'");
    const long lo = parse_long(origin, line, trim(value.substr(0, dots)));
    const long hi = parse_long(origin, line, trim(value.substr(dots + 2)));
    if (lo > hi) fail(origin, line, "empty range " + std::to_string(lo) + ".." + std::to_string(hi));
    return {lo, hi};
}

/// Matrix literal "[[a,b],[c,d]]"; entries are rationals.
QMatrix parse_matrix(const std::string& origin, std::size_t line, const std::string& value) {
    std::string text;
    for (char c : value)
        if (c != ' ' && c != '\t') text += c;
    if (text.size() < 4 || text.substr(0, 2) != "[[" || text.substr(text.size() - 2) != "]]")
        fail(origin, line, "expected a matrix '[[a,b],[c,d]]', got '" + value + "'");

    std::vector<std::vector<Rational>> rows;
    std::size_t cursor = 1;  // after the outer '['
    while (cursor < text.size() - 1) {
        if (text[cursor] != '[') fail(origin, line, "malformed matrix: expected '[' to open a row");
        const std::size_t close = text.find(']', cursor);
        if (close == std::string::npos) fail(origin, line, "malformed matrix: unclosed row");
        std::vector<Rational> row;
        for (const std::string& item : split_on(text.substr(cursor + 1, close - cursor - 1), ','))
            row.push_back(parse_rational_at(origin, line, item));
        if (!rows.empty() && rows.front().size() != row.size())
            fail(origin, line, "matrix rows have different lengths");
        rows.push_back(std::move(row));
        cursor = close + 1;
        if (cursor < text.size() - 1) {
            if (text[cursor] != ',') fail(origin, line, "malformed matrix: expected ',' between rows");
            ++cursor;
        }
    }
    if (rows.empty()) fail(origin, line, "empty matrix");
    return QMatrix::from_rows(rows);
}

std::vector<RawSection> scan_sections(const std::string& text, const std::string& origin) {
    std::vector<RawSection> sections;
    std::istringstream stream(text);
    std::string raw_line;
    std::size_t number = 0;
    while (std::getline(stream, raw_line)) {
        ++number;
        const auto hash = raw_line.find('#');
        if (hash != std::string::npos) raw_line.erase(hash);
        const std::string line = trim(raw_line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') fail(origin, number, "unclosed section header");
            const std::vector<std::string> words =
                split_words(line.substr(1, line.size() - 2));
            if (words.empty() || words.size() > 2)
                fail(origin, number, "section header must be [name] or [subh NAME]");
            RawSection section;
            section.line = number;
            section.name = words[0];
            if (words.size() == 2) section.arg = words[1];
            sections.push_back(std::move(section));
            continue;
        }

        const auto equals = line.find('=');
        if (equals == std::string::npos)
            fail(origin, number, "expected 'key = value' or a [section] header");
        if (sections.empty()) fail(origin, number, "entry before the first [section] header");
        Entry entry;
        entry.line = number;
        entry.keys = split_words(line.substr(0, equals));
        entry.value = trim(line.substr(equals + 1));
        if (entry.keys.empty()) fail(origin, number, "missing key before '='");
        if (entry.value.empty()) fail(origin, number, "missing value after '='");
        sections.back().entries.push_back(std::move(entry));
    }
    return sections;
}

GroupSpec assemble_group(const std::string& origin, const RawSection& section) {
    std::optional<std::string> kind;
    std::optional<std::vector<long>> orders;
    std::optional<long> rank;
    for (const Entry& entry : section.entries) {
        if (entry.keys.size() != 1)
            fail(origin, entry.line, "unknown key in [group]: '" + entry.keys[0] + " ...'");
        const std::string& key = entry.keys[0];
        if (key == "kind") {
            kind = entry.value;
        } else if (key == "orders") {
            std::vector<long> parsed;
            for (const std::string& word : split_words(entry.value))
                parsed.push_back(parse_long(origin, entry.line, word));
            orders = std::move(parsed);
        } else if (key == "rank") {
            rank = parse_long(origin, entry.line, entry.value);
        } else {
            fail(origin, entry.line, "unknown key in [group]: '" + key + "'");
        }
    }
    if (!kind) fail(origin, section.line, "[group] needs 'kind = finite_abelian|torus|product|sl2'");
    try {
        if (*kind == "finite_abelian") {
            if (!orders) fail(origin, section.line, "kind finite_abelian needs 'orders'");
            if (rank && *rank != 0) fail(origin, section.line, "finite_abelian has no torus factor");
            return GroupSpec::finite_abelian(*orders);
        }
        if (*kind == "torus") {
            if (orders) fail(origin, section.line, "a torus has no cyclic factors");
            if (!rank) fail(origin, section.line, "kind torus needs 'rank'");
            return GroupSpec::torus(static_cast<int>(*rank));
        }
        if (*kind == "product") {
            if (!orders || !rank)
                fail(origin, section.line, "kind product needs both 'orders' and 'rank'");
            return GroupSpec::product(*orders, static_cast<int>(*rank));
        }
        if (*kind == "sl2") {
            if (orders || rank) fail(origin, section.line, "sl2 takes no 'orders' or 'rank'");
            return GroupSpec::sl2();
        }
    } catch (const InputError& e) {
        fail(origin, section.line, e.what());
    }
    fail(origin, section.line, "unknown group kind '" + *kind + "'");
}

ActionSpec assemble_action(const std::string& origin, const RawSection& section,
                           const GroupSpec& group) {
    std::vector<std::string> names;
    std::vector<IrrepLabel> weights;
    for (const Entry& entry : section.entries) {
        if (entry.keys.size() != 2 || entry.keys[0] != "var")
            fail(origin, entry.line, "[action] entries look like 'var <name> = <weight entries>'");
        names.push_back(entry.keys[1]);
        weights.push_back(parse_label(origin, entry.line, group, split_words(entry.value)));
    }
    try {
        return ActionSpec::make(group, std::move(names), std::move(weights));
    } catch (const InputError& e) {
        fail(origin, section.line, e.what());
    }
}

struct IsotypicData {
    std::map<IrrepLabel, Rational> window;
    RayTail pos, neg;
};

IsotypicData assemble_isotypic(const std::string& origin, const RawSection& section,
                               const GroupSpec& group) {
    IsotypicData data;
    std::optional<std::pair<long, long>> range;
    for (const Entry& entry : section.entries) {
        if (entry.keys.size() == 1 && entry.keys[0] == "tail_pos") {
            data.pos = parse_tail(origin, entry.line, entry.value);
        } else if (entry.keys.size() == 1 && entry.keys[0] == "tail_neg") {
            data.neg = parse_tail(origin, entry.line, entry.value);
        } else if (entry.keys.size() == 1 && entry.keys[0] == "window") {
            if (!group.has_ray_labels())
                fail(origin, entry.line,
                     "'window = lo..hi' needs labels on a line; list labels explicitly");
            range = parse_range(origin, entry.line, entry.value);
        } else {
            const IrrepLabel label = parse_label(origin, entry.line, group, entry.keys);
            if (data.window.count(label))
                fail(origin, entry.line, "duplicate label " + to_string(label));
            data.window[label] = parse_rational_at(origin, entry.line, entry.value);
        }
    }
    if (range) {
        for (long n = range->first; n <= range->second; ++n) {
            IrrepLabel label;
            try {
                label = reduce_label(group, IrrepLabel{n});
            } catch (const InputError& e) {
                fail(origin, section.line, e.what());
            }
            data.window.emplace(label, Rational(0));  // keeps explicit entries
        }
    }
    return data;
}

std::set<IrrepLabel> parse_label_set(const std::string& origin, std::size_t line,
                                     const GroupSpec& group, const std::string& value) {
    std::set<IrrepLabel> labels;
    if (value == "all") {
        try {
            for (const IrrepLabel& label : all_labels(group)) labels.insert(label);
        } catch (const InputError& e) {
            fail(origin, line, e.what());
        }
        return labels;
    }
    if (value.find("..") != std::string::npos && group.has_ray_labels()) {
        const auto [lo, hi] = parse_range(origin, line, value);
        for (long n = lo; n <= hi; ++n) {
            try {
                labels.insert(reduce_label(group, IrrepLabel{n}));
            } catch (const InputError& e) {
                fail(origin, line, e.what());
            }
        }
        return labels;
    }
    for (const std::string& part : split_on(value, ';')) {
        const IrrepLabel label = parse_label(origin, line, group, split_words(part));
        if (!labels.insert(label).second)
            fail(origin, line, "duplicate label " + to_string(label));
    }
    return labels;
}

}  // namespace

const GroupSpec& ProblemFile::need_group() const {
    if (!group) throw InputError("this task needs a [group] section");
    return *group;
}
const ActionSpec& ProblemFile::need_action() const {
    if (!action) throw InputError("this task needs an [action] section");
    return *action;
}
const ThetaVector& ProblemFile::need_theta() const {
    if (!theta) throw InputError("this task needs a [theta] section");
    return *theta;
}
const HilbertFunction& ProblemFile::need_hilbert() const {
    if (!hilbert) throw InputError("this task needs a [hilbert] section");
    return *hilbert;
}
const EquivariantModule& ProblemFile::need_module() const {
    if (!module) throw InputError("this task needs a [module] section");
    return *module;
}
const HilbertFunction& ProblemFile::need_subh(const std::string& name) const {
    const auto it = sub_hilberts.find(name);
    if (it == sub_hilberts.end())
        throw InputError("no [subh " + name + "] section in the problem file");
    return it->second;
}

ProblemFile parse_problem_text(const std::string& text, const std::string& origin) {
    const std::vector<RawSection> sections = scan_sections(text, origin);

    const auto find_unique = [&](const std::string& name) -> const RawSection* {
        const RawSection* found = nullptr;
        for (const RawSection& section : sections) {
            if (section.name != name) continue;
            if (found)
                fail(origin, section.line, "duplicate [" + name + "] section");
            found = &section;
        }
        return found;
    };
    static const std::set<std::string> known = {"group",  "action", "theta", "hilbert",
                                                "subh",   "module", "params", "task"};
    for (const RawSection& section : sections) {
        if (!known.count(section.name))
            fail(origin, section.line, "unknown section [" + section.name + "]");
        if (section.name == "subh" && section.arg.empty())
            fail(origin, section.line, "[subh] needs a name: [subh NAME]");
        if (section.name != "subh" && !section.arg.empty())
            fail(origin, section.line, "[" + section.name + "] takes no argument");
    }

    ProblemFile problem;

    if (const RawSection* s = find_unique("group")) problem.group = assemble_group(origin, *s);
    const auto group_for = [&](const RawSection& s) -> const GroupSpec& {
        if (!problem.group) fail(origin, s.line, "[" + s.name + "] needs a [group] section");
        return *problem.group;
    };

    if (const RawSection* s = find_unique("action"))
        problem.action = assemble_action(origin, *s, group_for(*s));

    if (const RawSection* s = find_unique("theta")) {
        IsotypicData data = assemble_isotypic(origin, *s, group_for(*s));
        try {
            problem.theta =
                ThetaVector::make(group_for(*s), std::move(data.window), data.pos, data.neg);
        } catch (const InputError& e) {
            fail(origin, s->line, e.what());
        }
    }
    if (const RawSection* s = find_unique("hilbert")) {
        IsotypicData data = assemble_isotypic(origin, *s, group_for(*s));
        try {
            problem.hilbert =
                HilbertFunction::make(group_for(*s), std::move(data.window), data.pos, data.neg);
        } catch (const InputError& e) {
            fail(origin, s->line, e.what());
        }
    }
    for (const RawSection& section : sections) {
        if (section.name != "subh") continue;
        if (problem.sub_hilberts.count(section.arg))
            fail(origin, section.line, "duplicate [subh " + section.arg + "] section");
        IsotypicData data = assemble_isotypic(origin, section, group_for(section));
        try {
            problem.sub_hilberts[section.arg] =
                HilbertFunction::make(group_for(section), std::move(data.window), data.pos,
                                      data.neg);
        } catch (const InputError& e) {
            fail(origin, section.line, e.what());
        }
    }

    if (const RawSection* s = find_unique("module")) {
        if (!problem.action) fail(origin, s->line, "[module] needs an [action] section");
        const ActionSpec& action = *problem.action;
        std::map<IrrepLabel, long> dims;
        std::map<EquivariantModule::ArrowKey, QMatrix> arrows;
        for (const Entry& entry : s->entries) {
            if (entry.keys[0] == "component" && entry.keys.size() >= 2) {
                const IrrepLabel label =
                    parse_label(origin, entry.line, action.group,
                                {entry.keys.begin() + 1, entry.keys.end()});
                if (dims.count(label))
                    fail(origin, entry.line, "duplicate component " + to_string(label));
                const long dim = parse_long(origin, entry.line, entry.value);
                if (dim < 0) fail(origin, entry.line, "component dimensions must be >= 0");
                dims[label] = dim;
            } else if (entry.keys[0] == "arrow" && entry.keys.size() >= 3) {
                std::size_t var = 0;
                try {
                    var = action.variable_index(entry.keys[1]);
                } catch (const InputError& e) {
                    fail(origin, entry.line, e.what());
                }
                const IrrepLabel source =
                    parse_label(origin, entry.line, action.group,
                                {entry.keys.begin() + 2, entry.keys.end()});
                if (arrows.count({var, source}))
                    fail(origin, entry.line,
                         "duplicate arrow " + entry.keys[1] + " " + to_string(source));
                arrows[{var, source}] = parse_matrix(origin, entry.line, entry.value);
            } else if (entry.keys[0] == "frame" && entry.keys.size() >= 2) {
                const IrrepLabel label =
                    parse_label(origin, entry.line, action.group,
                                {entry.keys.begin() + 1, entry.keys.end()});
                if (problem.frames.count(label))
                    fail(origin, entry.line, "duplicate frame " + to_string(label));
                problem.frames[label] = parse_matrix(origin, entry.line, entry.value);
            } else {
                fail(origin, entry.line,
                     "[module] entries look like 'component <label> = <dim>', "
                     "'arrow <var> <label> = [[...]]' or 'frame <label> = [[...]]'");
            }
        }
        try {
            problem.module = EquivariantModule::make(action, std::move(dims), std::move(arrows));
        } catch (const InputError& e) {
            fail(origin, s->line, e.what());
        }
    }

    if (const RawSection* s = find_unique("params")) {
        const GroupSpec& group = group_for(*s);
        for (const Entry& entry : s->entries) {
            if (entry.keys.size() == 1 && entry.keys[0] == "window") {
                if (problem.params_window) fail(origin, entry.line, "duplicate window");
                problem.params_window =
                    parse_label_set(origin, entry.line, group, entry.value);
            } else if (entry.keys[0] == "kappa" && entry.keys.size() >= 2) {
                const IrrepLabel label = parse_label(origin, entry.line, group,
                                                     {entry.keys.begin() + 1, entry.keys.end()});
                if (problem.kappa_minus.count(label))
                    fail(origin, entry.line, "duplicate kappa at " + to_string(label));
                problem.kappa_minus[label] =
                    parse_rational_at(origin, entry.line, entry.value);
            } else {
                fail(origin, entry.line,
                     "[params] entries look like 'window = ...' or 'kappa <label> = <value>'");
            }
        }
    }

    if (const RawSection* s = find_unique("task")) {
        for (const Entry& entry : s->entries) {
            if (entry.keys.size() != 1)
                fail(origin, entry.line, "unknown key in [task]: '" + entry.keys[0] + " ...'");
            const std::string& key = entry.keys[0];
            const std::string& value = entry.value;
            if (key == "degree_bound") {
                problem.task.degree_bound = parse_long(origin, entry.line, value);
                if (problem.task.degree_bound < 1)
                    fail(origin, entry.line, "degree_bound must be >= 1");
            } else if (key == "subh_complete") {
                if (value != "true" && value != "false")
                    fail(origin, entry.line, "subh_complete must be true or false");
                problem.task.subh_complete = value == "true";
            } else if (key == "candidates") {
                for (const std::string& name : split_on(value, ';')) {
                    if (!problem.sub_hilberts.count(name))
                        fail(origin, entry.line, "candidate '" + name + "' has no [subh] section");
                    problem.task.candidates.push_back(name);
                }
            } else if (key == "hprime") {
                if (!problem.sub_hilberts.count(value))
                    fail(origin, entry.line, "hprime '" + value + "' has no [subh] section");
                problem.task.hprime = value;
            } else if (key == "seed") {
                problem.task.seed =
                    static_cast<std::uint64_t>(parse_long(origin, entry.line, value));
            } else if (key == "samples") {
                const long n = parse_long(origin, entry.line, value);
                if (n < 0) fail(origin, entry.line, "samples must be >= 0");
                problem.task.samples = static_cast<std::size_t>(n);
            } else if (key == "cap") {
                const long n = parse_long(origin, entry.line, value);
                if (n < 1) fail(origin, entry.line, "cap must be >= 1");
                problem.task.cap = static_cast<std::size_t>(n);
            } else if (key == "max_index") {
                problem.task.max_index = parse_long(origin, entry.line, value);
                if (problem.task.max_index < 1)
                    fail(origin, entry.line, "max_index must be >= 1");
            } else if (key == "bound") {
                problem.task.bound = parse_rational_at(origin, entry.line, value);
            } else if (key == "point") {
                std::vector<Rational> point;
                for (const std::string& word : split_words(value))
                    point.push_back(parse_rational_at(origin, entry.line, word));
                if (!problem.action)
                    fail(origin, entry.line, "'point' needs an [action] section");
                if (point.size() != problem.action->variable_count())
                    fail(origin, entry.line, "'point' needs one coordinate per variable");
                problem.task.point = std::move(point);
            } else if (key == "scope") {
                if (value == "full")
                    problem.task.scope = SubmoduleScope::Full;
                else if (value == "dminus")
                    problem.task.scope = SubmoduleScope::DminusGenerated;
                else
                    fail(origin, entry.line, "scope must be 'full' or 'dminus'");
            } else {
                fail(origin, entry.line, "unknown key in [task]: '" + key + "'");
            }
        }
    }

    return problem;
}

ProblemFile parse_problem_file(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) throw InputError("cannot read problem file '" + path + "'");
    std::ostringstream text;
    text << stream.rdbuf();
    return parse_problem_text(text.str(), path);
}

namespace {

std::string label_key(const IrrepLabel& label) {
    std::string out;
    for (std::size_t i = 0; i < label.entries.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(label.entries[i]);
    }
    return out;
}

std::string print_tail(const RayTail& tail) {
    switch (tail.kind) {
        case TailKind::Zero: return "zero";
        case TailKind::Constant: return "constant " + to_string(tail.coeff);
        case TailKind::Geometric:
            return "geometric " + to_string(tail.coeff) + " " + to_string(tail.base);
    }
    throw InternalError("unhandled tail kind");
}

std::string print_matrix(const QMatrix& m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) out += ",";
        out += "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ",";
            out += to_string(m.at(r, c));
        }
        out += "]";
    }
    return out + "]";
}

void print_isotypic(std::ostringstream& out, const IsotypicFunction& f) {
    for (const auto& [label, value] : f.window())
        out << label_key(label) << " = " << to_string(value) << "\n";
    if (f.pos_tail().kind != TailKind::Zero)
        out << "tail_pos = " << print_tail(f.pos_tail()) << "\n";
    if (f.neg_tail().kind != TailKind::Zero)
        out << "tail_neg = " << print_tail(f.neg_tail()) << "\n";
}

}  // namespace

std::string print_problem(const ProblemFile& problem) {
    std::ostringstream out;
    if (problem.group) {
        const GroupSpec& g = *problem.group;
        out << "[group]\n";
        if (g.is_sl2()) {
            out << "kind = sl2\n";
        } else if (g.torus_rank == 0) {
            out << "kind = finite_abelian\n";
        } else if (g.cyclic_orders.empty()) {
            out << "kind = torus\n";
        } else {
            out << "kind = product\n";
        }
        if (!g.cyclic_orders.empty()) {
            out << "orders =";
            for (long order : g.cyclic_orders) out << ' ' << order;
            out << "\n";
        }
        if (g.is_diagonalizable() && g.torus_rank > 0) out << "rank = " << g.torus_rank << "\n";
        out << "\n";
    }
    if (problem.action) {
        out << "[action]\n";
        for (std::size_t i = 0; i < problem.action->variable_count(); ++i)
            out << "var " << problem.action->variable_names[i] << " = "
                << label_key(problem.action->variable_weights[i]) << "\n";
        out << "\n";
    }
    if (problem.theta) {
        out << "[theta]\n";
        print_isotypic(out, problem.theta->function());
        out << "\n";
    }
    if (problem.hilbert) {
        out << "[hilbert]\n";
        print_isotypic(out, problem.hilbert->function());
        out << "\n";
    }
    for (const auto& [name, h] : problem.sub_hilberts) {
        out << "[subh " << name << "]\n";
        print_isotypic(out, h.function());
        out << "\n";
    }
    if (problem.module) {
        out << "[module]\n";
        const EquivariantModule& m = *problem.module;
        for (const auto& [label, dim] : m.components())
            out << "component " << label_key(label) << " = " << dim << "\n";
        for (const auto& [key, matrix] : m.arrows())
            out << "arrow " << m.action().variable_names[key.first] << " "
                << label_key(key.second) << " = " << print_matrix(matrix) << "\n";
        for (const auto& [label, matrix] : problem.frames)
            out << "frame " << label_key(label) << " = " << print_matrix(matrix) << "\n";
        out << "\n";
    }
    if (problem.params_window || !problem.kappa_minus.empty()) {
        out << "[params]\n";
        if (problem.params_window) {
            out << "window = ";
            bool first = true;
            for (const IrrepLabel& label : *problem.params_window) {
                if (!first) out << ";";
                out << label_key(label);
                first = false;
            }
            out << "\n";
        }
        for (const auto& [label, value] : problem.kappa_minus)
            out << "kappa " << label_key(label) << " = " << to_string(value) << "\n";
        out << "\n";
    }
    {
        const TaskOptions defaults;
        const TaskOptions& t = problem.task;
        std::ostringstream task;
        if (t.degree_bound != defaults.degree_bound)
            task << "degree_bound = " << t.degree_bound << "\n";
        if (t.subh_complete) task << "subh_complete = true\n";
        if (!t.candidates.empty()) {
            task << "candidates = ";
            for (std::size_t i = 0; i < t.candidates.size(); ++i)
                task << (i ? ";" : "") << t.candidates[i];
            task << "\n";
        }
        if (t.hprime) task << "hprime = " << *t.hprime << "\n";
        if (t.seed != defaults.seed) task << "seed = " << t.seed << "\n";
        if (t.samples != defaults.samples) task << "samples = " << t.samples << "\n";
        if (t.cap != defaults.cap) task << "cap = " << t.cap << "\n";
        if (t.max_index != defaults.max_index) task << "max_index = " << t.max_index << "\n";
        if (t.bound) task << "bound = " << to_string(*t.bound) << "\n";
        if (t.point) {
            task << "point =";
            for (const Rational& coordinate : *t.point) task << ' ' << to_string(coordinate);
            task << "\n";
        }
        if (t.scope != defaults.scope) task << "scope = full\n";
        if (!task.str().empty()) out << "[task]\n" << task.str() << "\n";
    }
    return out.str();
}

}  // namespace constellab
