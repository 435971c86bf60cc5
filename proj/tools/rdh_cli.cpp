// rdh: embed, extract, capacity, psnr and bench front end.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>

#include "rdh/bench.hpp"
#include "rdh/error.hpp"
#include "rdh/image.hpp"
#include "rdh/metrics.hpp"
#include "rdh/pipeline.hpp"
#include "rdh/sidecar.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw rdh::Error(rdh::Errc::IoError, "cannot write " + path);
  out << text;
}

std::pair<std::size_t, std::size_t> parse_size(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) throw UsageError("--size expects HxW, got " + text);
  return {std::stoul(text.substr(0, x)), std::stoul(text.substr(x + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reversible parity-pair data hiding for 8-bit grayscale PGM images"};
  app.require_subcommand(1);

  std::string cover_path, payload_path, out_path, sidecar_path, trace_path, stego_path, recovered_path;
  std::string mode_text = "sidecar";
  std::size_t layers = 1;

  auto* embed = app.add_subcommand("embed", "Hide a payload file in a cover image");
  embed->add_option("--cover", cover_path, "Cover PGM")->required();
  embed->add_option("--payload", payload_path, "Payload file")->required();
  embed->add_option("--layers", layers, "Layer count")->check(CLI::PositiveNumber);
  embed->add_option("--mode", mode_text, "inband|sidecar")->check(CLI::IsMember({"inband", "sidecar"}));
  embed->add_option("--out", out_path, "Stego PGM")->required();
  embed->add_option("--sidecar", sidecar_path, "Sidecar map file (sidecar mode)");
  embed->add_option("--trace", trace_path, "Write the embedding trace here");

  auto* extract = app.add_subcommand("extract", "Recover the payload and the cover");
  extract->add_option("--stego", stego_path, "Stego PGM")->required();
  extract->add_option("--layers", layers, "Layer count")->check(CLI::PositiveNumber);
  extract->add_option("--mode", mode_text, "inband|sidecar")->check(CLI::IsMember({"inband", "sidecar"}));
  extract->add_option("--sidecar", sidecar_path, "Sidecar map file (sidecar mode)");
  extract->add_option("--out", out_path, "Recovered payload file")->required();
  extract->add_option("--recovered", recovered_path, "Recovered cover PGM");

  auto* capacity = app.add_subcommand("capacity", "Report per-layer capacity and PSNR");
  capacity->add_option("--cover", cover_path, "Cover PGM")->required();
  capacity->add_option("--layers", layers, "Layer count")->check(CLI::PositiveNumber);
  capacity->add_option("--mode", mode_text, "inband|sidecar")->check(CLI::IsMember({"inband", "sidecar"}));

  std::string psnr_a, psnr_b;
  auto* psnr_cmd = app.add_subcommand("psnr", "PSNR between two PGM images");
  psnr_cmd->add_option("a", psnr_a, "First PGM")->required();
  psnr_cmd->add_option("b", psnr_b, "Second PGM")->required();

  std::string config_path, synthetic = "uniform", size_text = "512x512", methods_text;
  std::vector<std::string> bench_images;
  std::vector<std::size_t> bench_layers;
  std::vector<std::string> bench_methods;
  std::size_t synthetic_count = 3;
  std::uint64_t seed = 1;
  std::string report_path;
  bool no_timing = false;
  auto* bench = app.add_subcommand("bench", "Capacity/PSNR benchmark over a PGM corpus or synthetic covers");
  bench->add_option("--config", config_path, "JSON config file");
  bench->add_option("--images", bench_images, "Cover PGMs");
  bench->add_option("--synthetic", synthetic, "uniform|constant|gradient|block-parity");
  bench->add_option("--size", size_text, "Synthetic size HxW");
  bench->add_option("--count", synthetic_count, "Number of synthetic covers");
  bench->add_option("--methods", bench_methods, "proposed and/or de");
  bench->add_option("--layers", bench_layers, "Layer counts");
  bench->add_option("--mode", mode_text, "inband|sidecar")->check(CLI::IsMember({"inband", "sidecar"}));
  bench->add_option("--seed", seed, "Secret stream seed");
  bench->add_option("--report", report_path, "Report path (.txt, plus .csv and .md siblings)");
  bench->add_flag("--no-timing", no_timing, "Omit timing fields");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const rdh::TransportMode mode = rdh::parse_transport_mode(mode_text);
    if (*embed) {
      if (mode == rdh::TransportMode::Sidecar && sidecar_path.empty()) {
        throw UsageError("--sidecar is required in sidecar mode");
      }
      const auto cover = rdh::read_pgm_file(cover_path);
      const auto payload = rdh::read_binary_file(payload_path);
      const auto result = rdh::embed_multilayer(cover, payload, layers, mode);
      rdh::write_pgm_file(out_path, result.stego);
      if (mode == rdh::TransportMode::Sidecar) {
        rdh::write_binary_file(sidecar_path, rdh::encode_layer_sidecars(result.sidecars, mode));
      }
      if (!trace_path.empty()) write_text(trace_path, rdh::format_trace(result.trace));
    } else if (*extract) {
      if (mode == rdh::TransportMode::Sidecar && sidecar_path.empty()) {
        throw UsageError("--sidecar is required in sidecar mode");
      }
      const auto stego = rdh::read_pgm_file(stego_path);
      std::vector<rdh::LayerSidecar> sidecars;
      if (mode == rdh::TransportMode::Sidecar) {
        sidecars = rdh::decode_layer_sidecars(rdh::read_binary_file(sidecar_path));
      }
      const auto result = rdh::extract_multilayer(stego, layers, mode, sidecars);
      rdh::write_binary_file(out_path, result.payload);
      if (!recovered_path.empty()) rdh::write_pgm_file(recovered_path, result.cover);
    } else if (*capacity) {
      const auto cover = rdh::read_pgm_file(cover_path);
      std::cout << rdh::format_capacity(rdh::capacity_probe(cover, layers, mode));
    } else if (*psnr_cmd) {
      std::cout << rdh::format_db(rdh::psnr(rdh::read_pgm_file(psnr_a), rdh::read_pgm_file(psnr_b))) << '\n';
    } else if (*bench) {
      rdh::BenchConfig cfg;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw rdh::Error(rdh::Errc::IoError, "cannot open " + config_path);
        cfg = rdh::BenchConfig::from_json(nlohmann::json::parse(in));
      } else {
        cfg.mode = mode;
        cfg.seed = seed;
        if (!bench_images.empty()) {
          for (const auto& path : bench_images) {
            rdh::ImageSource src;
            src.path = path;
            src.id = std::filesystem::path(path).stem().string();
            cfg.images.push_back(src);
          }
        } else {
          const auto [h, w] = parse_size(size_text);
          for (std::size_t i = 0; i < synthetic_count; ++i) {
            rdh::ImageSource src;
            src.kind = synthetic;
            src.height = h;
            src.width = w;
            src.seed = i + 1;
            src.id = synthetic + "-" + std::to_string(i + 1);
            cfg.images.push_back(src);
          }
        }
        if (!bench_methods.empty()) {
          cfg.methods.clear();
          for (const auto& m : bench_methods) cfg.methods.push_back(rdh::parse_method(m));
        }
        if (!bench_layers.empty()) cfg.layers = bench_layers;
        if (!report_path.empty()) cfg.output = report_path;
      }
      const auto report = rdh::run_bench(cfg);
      std::cout << rdh::format_report_text(report, !no_timing) << '\n' << rdh::format_report_markdown(report);
      if (cfg.output) {
        const std::string base = cfg.output->string();
        write_text(base, rdh::format_report_text(report, !no_timing));
        write_text(base + ".csv", rdh::format_report_csv(report, !no_timing));
        write_text(base + ".md", rdh::format_report_markdown(report));
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "UsageError: " << e.what() << '\n';
    return 2;
  } catch (const rdh::Error& e) {
    std::cerr << e.what() << '\n';
    return e.code() == rdh::Errc::InvalidArgument ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "InternalError: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
