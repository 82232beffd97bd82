#include "pspec/index_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pspec {

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<int> parse_index_list(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("malformed JSON index list: ") + e.what());
        }
        std::vector<int> out;
        for (const auto& item : j) {
            if (!item.is_number_integer())
                throw std::invalid_argument("JSON index list must contain only integers");
            out.push_back(item.get<int>());
        }
        return out;
    }

    std::vector<int> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string_view::npos)
            continue;
        const auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
        if (ec != std::errc{} || ptr != line.data() + line.size())
            throw std::invalid_argument("malformed index on line " + std::to_string(line_no) + ": '" +
                                        std::string(line) + "'");
        out.push_back(value);
    }
    return out;
}

std::vector<int> read_index_list(const std::string& path)
{
    try {
        return parse_index_list(read_text_file(path));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

std::vector<BitVector> read_bit_matrix(const std::string& path)
{
    std::istringstream in(read_text_file(path));
    std::vector<BitVector> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::string bits;
        for (char ch : line)
            if (ch != ' ' && ch != '\t' && ch != '\r')
                bits += ch;
        if (bits.empty())
            continue;
        rows.push_back(BitVector::from_string(bits));
    }
    return rows;
}

} // namespace pspec
