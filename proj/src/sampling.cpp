#include "opburgers/sampling.hpp"

#include <cmath>
#include <random>

#include "opburgers/errors.hpp"

namespace opburgers::sampling {

namespace {

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};

double radical_inverse(int index, int base) {
    double result = 0.0;
    double scale = 1.0 / base;
    while (index > 0) {
        result += (index % base) * scale;
        index /= base;
        scale /= base;
    }
    return result;
}

double node(const Interval& range, int i, int count) {
    return count == 1 ? range.mid() : range.lo + range.extent() * i / (count - 1);
}

}  // namespace

std::vector<Sample> halton(const Box& box, Interval time, int count, std::uint64_t seed) {
    const std::size_t dims = box.size() + 1;
    if (dims > std::size(kPrimes)) throw ParameterError("too many dimensions for the Halton sequence");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> shift(dims);
    for (auto& s : shift) s = unit(rng);

    std::vector<Sample> out;
    out.reserve(count);
    for (int i = 1; i <= count; ++i) {
        Sample s;
        s.x.resize(box.size());
        for (std::size_t d = 0; d < dims; ++d) {
            const double u = std::fmod(radical_inverse(i, kPrimes[d]) + shift[d], 1.0);
            if (d < box.size()) {
                s.x[d] = box[d].lo + box[d].extent() * u;
            } else {
                s.t = time.lo + time.extent() * u;
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Sample> tensor_grid(const Box& box, Interval time, const std::vector<int>& nodes, int time_nodes) {
    if (nodes.size() != box.size()) throw ParameterError("grid needs one node count per axis");
    std::vector<Sample> out;
    std::vector<int> index(box.size(), 0);
    for (int k = 0; k < time_nodes; ++k) {
        const double t = node(time, k, time_nodes);
        std::fill(index.begin(), index.end(), 0);
        while (true) {
            Sample s;
            s.t = t;
            for (std::size_t d = 0; d < box.size(); ++d) s.x.push_back(node(box[d], index[d], nodes[d]));
            out.push_back(std::move(s));
            std::size_t d = 0;
            while (d < box.size() && ++index[d] == nodes[d]) index[d++] = 0;
            if (d == box.size()) break;
        }
    }
    return out;
}

}  // namespace opburgers::sampling
