#include "apptalk/feature_structure.hpp"

#include <cctype>

namespace apptalk {

void FeatureStructure::set(const std::string& feature, FeatureStructure value) {
    std::get<Map>(node_)[feature] = std::move(value);
}

const FeatureStructure* FeatureStructure::get(const std::string& feature) const {
    if (!isMap()) return nullptr;
    auto& m = std::get<Map>(node_);
    auto it = m.find(feature);
    return it == m.end() ? nullptr : &it->second;
}

std::int64_t FeatureStructure::numberAt(const std::string& feature,
                                        std::int64_t fallback) const {
    const auto* f = get(feature);
    return f && f->isNumber() ? f->number() : fallback;
}

std::string FeatureStructure::symbolAt(const std::string& feature,
                                       const std::string& fallback) const {
    const auto* f = get(feature);
    return f && f->isSymbol() ? f->symbol() : fallback;
}

std::string FeatureStructure::textAt(const std::string& feature,
                                     const std::string& fallback) const {
    const auto* f = get(feature);
    return f && f->isText() ? f->textValue() : fallback;
}

bool isValidSymbol(const std::string& name) {
    if (name.empty()) return false;
    unsigned char c0 = static_cast<unsigned char>(name[0]);
    if (!std::isalpha(c0) && c0 != '_') return false;
    for (char ch : name) {
        unsigned char c = static_cast<unsigned char>(ch);
        if (!std::isalnum(c) && c != '_' && c != '-') return false;
    }
    return true;
}

namespace {

void encodeText(const std::string& s, std::string& out) {
    out += '"';
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += ch;
        }
    }
    out += '"';
}

void encodeInto(const FeatureStructure& fs, std::string& out) {
    if (fs.isSymbol()) {
        if (!isValidSymbol(fs.symbol()))
            throw std::invalid_argument("invalid symbol: " + fs.symbol());
        out += fs.symbol();
    } else if (fs.isNumber()) {
        out += std::to_string(fs.number());
    } else if (fs.isText()) {
        encodeText(fs.textValue(), out);
    } else if (fs.isList()) {
        out += '{';
        bool first = true;
        for (const auto& item : fs.items()) {
            if (!first) out += ", ";
            first = false;
            encodeInto(item, out);
        }
        out += '}';
    } else {
        out += '[';
        bool first = true;
        for (const auto& [name, value] : fs.features()) {
            if (!isValidSymbol(name))
                throw std::invalid_argument("invalid feature name: " + name);
            if (!first) out += ", ";
            first = false;
            out += name;
            out += ": ";
            encodeInto(value, out);
        }
        out += ']';
    }
}

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    FeatureStructure parse() {
        skipWs();
        FeatureStructure fs = parseNode();
        skipWs();
        if (pos_ != text_.size()) fail("trailing input");
        return fs;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw FsParseError(pos_, msg);
    }

    void skipWs() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const {
        if (pos_ >= text_.size()) throw FsParseError(pos_, "unexpected end of input");
        return text_[pos_];
    }

    void expect(char ch) {
        if (peek() != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }

    FeatureStructure parseNode() {
        char c = peek();
        if (c == '[') return parseMap();
        if (c == '{') return parseList();
        if (c == '"') return FeatureStructure::text(parseQuoted());
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c)))
            return parseNumber();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return FeatureStructure::sym(parseSymbol());
        fail("unexpected character");
    }

    FeatureStructure parseMap() {
        expect('[');
        FeatureStructure::Map features;
        skipWs();
        if (peek() == ']') {
            ++pos_;
            return FeatureStructure::map();
        }
        while (true) {
            skipWs();
            std::size_t namePos = pos_;
            std::string name = parseSymbol();
            skipWs();
            expect(':');
            skipWs();
            FeatureStructure value = parseNode();
            if (!features.emplace(name, std::move(value)).second)
                throw FsParseError(namePos, "duplicate feature " + name);
            skipWs();
            char c = peek();
            if (c == ',') {
                ++pos_;
                continue;
            }
            expect(']');
            break;
        }
        return FeatureStructure::map(std::move(features));
    }

    FeatureStructure parseList() {
        expect('{');
        FeatureStructure::List items;
        skipWs();
        if (peek() == '}') {
            ++pos_;
            return FeatureStructure::list();
        }
        while (true) {
            skipWs();
            items.push_back(parseNode());
            skipWs();
            char c = peek();
            if (c == ',') {
                ++pos_;
                continue;
            }
            expect('}');
            break;
        }
        return FeatureStructure::list(std::move(items));
    }

    std::string parseSymbol() {
        std::size_t start = pos_;
        if (pos_ >= text_.size()) fail("expected symbol");
        unsigned char c0 = static_cast<unsigned char>(text_[pos_]);
        if (!std::isalpha(c0) && c0 != '_') fail("expected symbol");
        while (pos_ < text_.size()) {
            unsigned char c = static_cast<unsigned char>(text_[pos_]);
            if (std::isalnum(c) || c == '_' || c == '-')
                ++pos_;
            else
                break;
        }
        return text_.substr(start, pos_ - start);
    }

    FeatureStructure parseNumber() {
        std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected digit");
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return FeatureStructure::num(
            std::stoll(text_.substr(start, pos_ - start)));
    }

    std::string parseQuoted() {
        expect('"');
        std::string out;
        while (true) {
            if (pos_ >= text_.size()) fail("unterminated string");
            char c = text_[pos_++];
            if (c == '"') break;
            if (c == '\\') {
                if (pos_ >= text_.size()) fail("unterminated escape");
                char e = text_[pos_++];
                switch (e) {
                    case '"': out += '"'; break;
                    case '\\': out += '\\'; break;
                    case 'n': out += '\n'; break;
                    case 't': out += '\t'; break;
                    default: fail("unknown escape");
                }
            } else {
                out += c;
            }
        }
        return out;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string encode(const FeatureStructure& fs) {
    std::string out;
    encodeInto(fs, out);
    return out;
}

FeatureStructure decode(const std::string& text) {
    return Parser{text}.parse();
}

}  // namespace apptalk
