#include "segcalc/permutation.hpp"

#include "segcalc/errors.hpp"

#include <sstream>

namespace segcalc {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
        if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || seen[v])
            throw PreconditionError("not a permutation");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t t) {
    std::vector<int> image(t);
    for (std::size_t i = 0; i < t; ++i) image[i] = static_cast<int>(i);
    return Permutation(std::move(image));
}

bool Permutation::is_involution() const {
    for (std::size_t i = 0; i < image_.size(); ++i)
        if (image_[image_[i]] != static_cast<int>(i)) return false;
    return true;
}

std::string Permutation::cycles() const {
    std::string out;
    std::vector<bool> done(image_.size(), false);
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (done[i] || is_fixed(i)) continue;
        out += "(";
        std::size_t j = i;
        bool first = true;
        while (!done[j]) {
            done[j] = true;
            if (!first) out += " ";
            out += std::to_string(j + 1);
            first = false;
            j = image_[j];
        }
        out += ")";
    }
    return out.empty() ? "id" : out;
}

std::string Permutation::one_line() const {
    std::string out;
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(image_[i] + 1);
    }
    return out;
}

namespace {

void extend_involutions(std::vector<int>& image, std::size_t pos, std::vector<Permutation>& out) {
    while (pos < image.size() && image[pos] >= 0) ++pos;
    if (pos == image.size()) {
        out.emplace_back(image);
        return;
    }
    // Partners in increasing order keep the output lexicographic.
    for (std::size_t j = pos; j < image.size(); ++j) {
        if (image[j] >= 0) continue;
        image[pos] = static_cast<int>(j);
        image[j] = static_cast<int>(pos);
        extend_involutions(image, pos + 1, out);
        image[j] = -1;
        image[pos] = -1;
    }
}

}  // namespace

std::vector<Permutation> involutions(std::size_t t) {
    std::vector<Permutation> out;
    std::vector<int> image(t, -1);
    extend_involutions(image, 0, out);
    return out;
}

Permutation parse_one_line(const std::string& text) {
    std::vector<int> image;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw PreconditionError("bad permutation entry '" + item + "'");
        }
        if (used != item.size()) throw PreconditionError("bad permutation entry '" + item + "'");
        image.push_back(v - 1);
    }
    return Permutation(std::move(image));
}

}  // namespace segcalc
