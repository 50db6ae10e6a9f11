#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "cavnet/config.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty()) {
        std::cerr << "usage: cavnet <simulate|spectrum|negativity|verify> [options]\n"
                     "       cavnet <subcommand> --help\n";
        return 2;
    }
    try {
        const cavnet::RunConfig cfg = cavnet::parse_config(args);
        if (cfg.command == "simulate") {
            cavnet::emit_output(cfg, cavnet::run_simulate(cfg));
        } else if (cfg.command == "spectrum") {
            cavnet::emit_output(cfg, cavnet::run_spectrum(cfg));
        } else if (cfg.command == "negativity") {
            cavnet::emit_output(cfg, cavnet::run_negativity(cfg));
        } else if (cfg.command == "verify") {
            return cavnet::run_verify(cfg, std::cout);
        }
        return 0;
    } catch (const cavnet::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
