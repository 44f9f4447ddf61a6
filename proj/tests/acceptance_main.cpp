// ctest acceptance runner; same engine as `zml selftest`.
#include <cstring>
#include <iostream>
#include <string>

#include "zml/acceptance.hpp"

int main(int argc, char** argv) {
    zml::accept::Options opt;
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string a = argv[i];
        if (a == "--zeros") opt.zeros_path = argv[i + 1];
        else if (a == "--zml") opt.zml_binary = argv[i + 1];
        else if (a == "--seed") opt.seed = std::stoull(argv[i + 1]);
        else if (a == "--criteria") {
            std::string s = argv[i + 1];
            std::size_t p = 0;
            while (p < s.size()) {
                std::size_t q = s.find(',', p);
                if (q == std::string::npos) q = s.size();
                opt.criteria.push_back(std::stoi(s.substr(p, q - p)));
                p = q + 1;
            }
        }
    }
    bool ok = zml::accept::run_all(opt, std::cout);
    return ok ? 0 : 1;
}
