#ifndef TTB_JSON_OUT_HPP
#define TTB_JSON_OUT_HPP

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace ttb {

// Report emission goes through this tiny writer instead of a JSON library:
// doubles are printed with 17 significant digits (round-trip exact) and key
// order is exactly insertion order, so identical runs produce identical bytes.
class JsonWriter {
public:
    JsonWriter& begin_object() { open('{'); return *this; }
    JsonWriter& end_object() { close('}'); return *this; }
    JsonWriter& begin_array() { open('['); return *this; }
    JsonWriter& end_array() { close(']'); return *this; }

    JsonWriter& key(const std::string& k) {
        comma();
        append_string(k);
        out_ += ':';
        pending_value_ = true;
        return *this;
    }

    JsonWriter& value(double v) { comma(); out_ += format_double(v); return *this; }
    JsonWriter& value(std::int64_t v) { comma(); out_ += std::to_string(v); return *this; }
    JsonWriter& value(std::uint64_t v) { comma(); out_ += std::to_string(v); return *this; }
    JsonWriter& value(int v) { comma(); out_ += std::to_string(v); return *this; }
    JsonWriter& value(bool v) { comma(); out_ += v ? "true" : "false"; return *this; }
    JsonWriter& value(const std::string& v) { comma(); append_string(v); return *this; }
    JsonWriter& value(const char* v) { return value(std::string(v)); }
    JsonWriter& null() { comma(); out_ += "null"; return *this; }
    // Inserts pre-serialized JSON verbatim.
    JsonWriter& raw(const std::string& json) { comma(); out_ += json; return *this; }

    JsonWriter& value(const std::vector<double>& v) {
        begin_array();
        for (double x : v) value(x);
        return end_array();
    }

    const std::string& str() const { return out_; }

    static std::string format_double(double v) {
        if (std::isnan(v)) return "null";
        if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }

private:
    void open(char c) {
        comma();
        out_ += c;
        depth_first_.push_back(true);
    }
    void close(char c) {
        out_ += c;
        depth_first_.pop_back();
        pending_value_ = false;
    }
    void comma() {
        if (pending_value_) {
            pending_value_ = false;
            return;
        }
        if (!depth_first_.empty()) {
            if (!depth_first_.back()) out_ += ',';
            depth_first_.back() = false;
        }
    }
    void append_string(const std::string& s) {
        out_ += '"';
        for (char c : s) {
            switch (c) {
                case '"': out_ += "\\\""; break;
                case '\\': out_ += "\\\\"; break;
                case '\n': out_ += "\\n"; break;
                case '\t': out_ += "\\t"; break;
                case '\r': out_ += "\\r"; break;
                default: out_ += c;
            }
        }
        out_ += '"';
    }

    std::string out_;
    std::vector<bool> depth_first_;
    bool pending_value_ = false;
};

} // namespace ttb

#endif
