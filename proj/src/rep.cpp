#include "qv/rep.hpp"

namespace qv {

RepQ string_module(const StringSpec& spec, PresPtr aa) {
    spec.validate();
    if (!aa) aa = share(make_AA(spec.n));
    if (!same_presentation(*aa, make_AA(spec.n)))
        throw Error("string_module: presentation is not the doubled " + std::to_string(spec.n) +
                    "-chain");
    std::vector<int> dims(static_cast<size_t>(spec.n), 0);
    for (int k = spec.i; k <= spec.j; ++k) dims[static_cast<size_t>(k - 1)] = 1;
    RepQ v = make_zero_rep<Rational>(aa, dims, FieldInfo{0});
    for (int l = 1; l <= spec.j - spec.i; ++l) {
        int step = spec.i + l - 1;  // arrows between (step) and (step+1)
        int a_idx = aa->quiver.arrow_index("a" + std::to_string(step));
        int b_idx = aa->quiver.arrow_index("b" + std::to_string(step));
        if (spec.signs[static_cast<size_t>(l - 1)] == '+')
            v.maps[static_cast<size_t>(a_idx)].at(0, 0) = 1;
        else
            v.maps[static_cast<size_t>(b_idx)].at(0, 0) = 1;
    }
    return v;
}

std::vector<StringSpec> all_string_specs(int n) {
    std::vector<StringSpec> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            int len = j - i;
            for (int mask = 0; mask < (1 << len); ++mask) {
                std::string signs;
                for (int l = 0; l < len; ++l) signs += (mask >> l) & 1 ? '-' : '+';
                out.push_back(StringSpec{n, i, j, signs});
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qv
