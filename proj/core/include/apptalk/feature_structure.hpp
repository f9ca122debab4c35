#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace apptalk {

// Attribute-value trees exchanged between clients and the server. A node is
// either an atom (symbol, integer or quoted text), an ordered list, or a map
// from feature names to child structures. Feature names are unique per map
// node and the canonical text form keeps them sorted, so encode/decode is a
// lossless round trip.
class FeatureStructure {
public:
    struct Symbol {
        std::string name;
        bool operator==(const Symbol&) const = default;
    };

    using List = std::vector<FeatureStructure>;
    using Map = std::map<std::string, FeatureStructure>;
    using Node = std::variant<Symbol, std::int64_t, std::string, List, Map>;

    FeatureStructure() : node_(Map{}) {}
    explicit FeatureStructure(Node n) : node_(std::move(n)) {}

    static FeatureStructure sym(std::string name) {
        return FeatureStructure{Symbol{std::move(name)}};
    }
    static FeatureStructure num(std::int64_t v) { return FeatureStructure{v}; }
    static FeatureStructure text(std::string v) {
        return FeatureStructure{Node{std::move(v)}};
    }
    static FeatureStructure list(List items = {}) {
        return FeatureStructure{Node{std::move(items)}};
    }
    static FeatureStructure map(Map features = {}) {
        return FeatureStructure{Node{std::move(features)}};
    }

    bool isSymbol() const { return std::holds_alternative<Symbol>(node_); }
    bool isNumber() const { return std::holds_alternative<std::int64_t>(node_); }
    bool isText() const { return std::holds_alternative<std::string>(node_); }
    bool isList() const { return std::holds_alternative<List>(node_); }
    bool isMap() const { return std::holds_alternative<Map>(node_); }

    const std::string& symbol() const { return std::get<Symbol>(node_).name; }
    std::int64_t number() const { return std::get<std::int64_t>(node_); }
    const std::string& textValue() const { return std::get<std::string>(node_); }
    const List& items() const { return std::get<List>(node_); }
    List& items() { return std::get<List>(node_); }
    const Map& features() const { return std::get<Map>(node_); }
    Map& features() { return std::get<Map>(node_); }

    // Map convenience. get() returns nullptr when the feature is absent.
    void set(const std::string& feature, FeatureStructure value);
    const FeatureStructure* get(const std::string& feature) const;
    bool has(const std::string& feature) const { return get(feature) != nullptr; }

    // Typed accessors with defaults, for schema reading on the wire path.
    std::int64_t numberAt(const std::string& feature, std::int64_t fallback) const;
    std::string symbolAt(const std::string& feature, const std::string& fallback) const;
    std::string textAt(const std::string& feature, const std::string& fallback) const;

    bool operator==(const FeatureStructure&) const = default;

private:
    Node node_;
};

// Raised by decode() on malformed input; position is a byte offset into the
// input text.
class FsParseError : public std::runtime_error {
public:
    FsParseError(std::size_t position, const std::string& what)
        : std::runtime_error(what + " at offset " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Canonical text form: symbols bare, integers decimal, text double quoted
// with \" \\ \n \t escapes, lists as {a, b}, maps as [FEAT: v, ...] with
// features in sorted order. decode(encode(fs)) == fs for every valid tree.
std::string encode(const FeatureStructure& fs);
FeatureStructure decode(const std::string& text);

bool isValidSymbol(const std::string& name);

}  // namespace apptalk
