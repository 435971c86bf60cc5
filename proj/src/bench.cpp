#include "rdh/bench.hpp"

#include <chrono>
#include <cstdio>
#include <future>
#include <sstream>

#include "rdh/de_baseline.hpp"
#include "rdh/error.hpp"
#include "rdh/metrics.hpp"
#include "rdh/pipeline.hpp"
#include "rdh/synth.hpp"

namespace rdh {

std::string_view to_string(Method method) noexcept {
  return method == Method::Proposed ? "proposed" : "de";
}

Method parse_method(std::string_view text) {
  if (text == "proposed") return Method::Proposed;
  if (text == "de") return Method::DifferenceExpansion;
  throw Error(Errc::InvalidArgument, "unknown method '" + std::string(text) + "'");
}

GrayImage ImageSource::load() const {
  if (path) return read_pgm_file(*path);
  return synthetic_image(kind, height, width, seed, value);
}

BenchConfig BenchConfig::from_json(const nlohmann::json& j) {
  BenchConfig cfg;
  if (j.contains("images")) {
    std::size_t index = 0;
    for (const auto& item : j.at("images")) {
      ImageSource src;
      if (item.is_string()) {
        src.path = item.get<std::string>();
      } else if (item.contains("path")) {
        src.path = item.at("path").get<std::string>();
      } else {
        src.kind = item.value("synthetic", std::string("uniform"));
        src.height = item.value("height", std::size_t{512});
        src.width = item.value("width", std::size_t{512});
        src.seed = item.value("seed", std::uint64_t{index + 1});
        src.value = static_cast<std::uint8_t>(item.value("value", 128));
      }
      if (item.is_object() && item.contains("id")) {
        src.id = item.at("id").get<std::string>();
      } else if (src.path) {
        src.id = src.path->stem().string();
      } else {
        src.id = src.kind + "-" + std::to_string(src.seed);
      }
      cfg.images.push_back(std::move(src));
      ++index;
    }
  }
  if (j.contains("methods")) {
    cfg.methods.clear();
    for (const auto& m : j.at("methods")) cfg.methods.push_back(parse_method(m.get<std::string>()));
  }
  if (j.contains("layers")) cfg.layers = j.at("layers").get<std::vector<std::size_t>>();
  if (j.contains("mode")) cfg.mode = parse_transport_mode(j.at("mode").get<std::string>());
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("output")) cfg.output = j.at("output").get<std::string>();
  return cfg;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Embedded {
  GrayImage stego;
  std::size_t gross_bits = 0;
  std::size_t map_bits = 0;
  std::size_t consumed = 0;
  std::vector<LayerSidecar> layer_sidecars;
  std::vector<StageSidecar> de_sidecars;
};

Embedded embed_de_layers(const GrayImage& cover, BitStream& secret, std::size_t layers, TransportMode mode) {
  Embedded out;
  out.stego = cover;
  for (std::size_t i = 0; i < layers; ++i) {
    DEEmbedResult r = de_embed(out.stego, secret, mode);
    out.gross_bits += r.trace.expandable;
    out.map_bits += r.trace.map_bits;
    if (r.trace.sidecar) out.de_sidecars.push_back(*r.trace.sidecar);
    out.stego = std::move(r.stego);
  }
  return out;
}

std::pair<BitStream, GrayImage> extract_de_layers(const GrayImage& stego, std::size_t layers,
                                                  TransportMode mode,
                                                  const std::vector<StageSidecar>& sidecars) {
  std::vector<BitStream> parts(layers);
  GrayImage current = stego;
  for (std::size_t i = layers; i-- > 0;) {
    DEExtractResult r = de_extract(current, mode, mode == TransportMode::Sidecar ? &sidecars[i] : nullptr);
    parts[i] = std::move(r.secret);
    current = std::move(r.cover);
  }
  BitStream all;
  for (const auto& p : parts) all.append(p);
  return {std::move(all), std::move(current)};
}

}  // namespace

BenchRow bench_one(const GrayImage& cover, std::string_view id, Method method, std::size_t layers,
                   TransportMode mode, std::uint64_t seed) {
  BitStream secret = random_bits(layers * cover.size(), seed);
  BenchRow row;
  row.image = std::string(id);
  row.method = method;
  row.k = layers;
  row.pixels = cover.size();

  auto start = Clock::now();
  Embedded embedded;
  if (method == Method::Proposed) {
    MultiLayerEmbedResult r = embed_layers(cover, secret, layers, mode);
    embedded.stego = std::move(r.stego);
    for (const auto& l : r.trace.layers) {
      embedded.gross_bits += l.le1 + l.le2;
      embedded.map_bits += l.lc1 + l.lc2;
    }
    embedded.layer_sidecars = std::move(r.sidecars);
  } else {
    embedded = embed_de_layers(cover, secret, layers, mode);
  }
  embedded.consumed = secret.cursor();
  row.embed_ms = ms_since(start);

  start = Clock::now();
  BitStream recovered_bits;
  GrayImage recovered;
  try {
    if (method == Method::Proposed) {
      MultiLayerExtractResult r = extract_layers(embedded.stego, layers, mode, embedded.layer_sidecars);
      recovered_bits = std::move(r.secret);
      recovered = std::move(r.cover);
    } else {
      std::tie(recovered_bits, recovered) =
          extract_de_layers(embedded.stego, layers, mode, embedded.de_sidecars);
    }
  } catch (const Error& e) {
    throw std::logic_error("extraction failed for " + row.image + ": " + e.what());
  }
  row.extract_ms = ms_since(start);

  row.ok = recovered == cover && recovered_bits == secret.slice(0, embedded.consumed);
  if (!row.ok) {
    throw std::logic_error("round trip failed for " + row.image + " method=" +
                           std::string(to_string(method)) + " k=" + std::to_string(layers));
  }
  const double pixels = static_cast<double>(cover.size());
  row.gross_bits = embedded.gross_bits;
  row.map_bits = embedded.map_bits;
  row.gross_bpp = static_cast<double>(embedded.gross_bits) / pixels;
  row.net_bpp = (static_cast<double>(embedded.gross_bits) - static_cast<double>(embedded.map_bits)) / pixels;
  row.sidecar_bpp = mode == TransportMode::Sidecar ? static_cast<double>(embedded.map_bits) / pixels : 0.0;
  row.psnr_db = psnr(cover, embedded.stego);
  return row;
}

BenchReport run_bench(const BenchConfig& config) {
  struct ImageResult {
    std::vector<BenchRow> rows;
    std::vector<BenchFailure> failures;
  };
  std::vector<std::future<ImageResult>> jobs;
  for (std::size_t i = 0; i < config.images.size(); ++i) {
    jobs.push_back(std::async(std::launch::async, [&config, i] {
      ImageResult result;
      const ImageSource& src = config.images[i];
      const GrayImage cover = src.load();
      std::uint64_t combo = 0;
      for (Method method : config.methods) {
        for (std::size_t k : config.layers) {
          const std::uint64_t seed = config.seed * 1000003u + i * 1009u + combo++;
          try {
            result.rows.push_back(bench_one(cover, src.id, method, k, config.mode, seed));
          } catch (const Error& e) {
            result.failures.push_back({src.id, method, k, e.what()});
          }
        }
      }
      return result;
    }));
  }
  BenchReport report;
  report.mode = config.mode;
  for (auto& job : jobs) {
    ImageResult r = job.get();
    report.rows.insert(report.rows.end(), r.rows.begin(), r.rows.end());
    report.failures.insert(report.failures.end(), r.failures.begin(), r.failures.end());
  }
  return report;
}

std::optional<ClaimThreshold> claim_for(Method method, std::size_t k) {
  if (method != Method::Proposed) return std::nullopt;
  switch (k) {
    case 1: return ClaimThreshold{1, 0.5, 54.0};
    case 2: return ClaimThreshold{2, 1.0, 53.0};
    case 5: return ClaimThreshold{5, 2.0, 52.0};
    default: return std::nullopt;
  }
}

namespace {

std::string fixed(double v, int digits = 6) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string claim_verdict(const BenchRow& row) {
  const auto claim = claim_for(row.method, row.k);
  if (!claim) return "-";
  std::string out = ">" + fixed(claim->bpp, 1) + "bpp " + (row.gross_bpp >= claim->bpp ? "met" : "NOT met");
  out += ", >" + fixed(claim->psnr_db, 0) + "dB " + (row.psnr_db >= claim->psnr_db ? "met" : "NOT met");
  return out;
}

}  // namespace

std::string format_report_text(const BenchReport& report, bool with_timing) {
  std::ostringstream out;
  out << "# mode=" << to_string(report.mode) << '\n';
  for (const auto& row : report.rows) {
    out << "image=" << row.image << " method=" << to_string(row.method) << " k=" << row.k
        << " gross_bpp=" << fixed(row.gross_bpp) << " net_bpp=" << fixed(row.net_bpp)
        << " sidecar_bpp=" << fixed(row.sidecar_bpp) << " psnr_db=" << format_db(row.psnr_db)
        << " ok=" << (row.ok ? "true" : "false");
    if (with_timing) out << " embed_ms=" << fixed(row.embed_ms, 2) << " extract_ms=" << fixed(row.extract_ms, 2);
    out << '\n';
  }
  for (const auto& f : report.failures) {
    out << "failure image=" << f.image << " method=" << to_string(f.method) << " k=" << f.k
        << " error=\"" << f.error << "\"\n";
  }
  return out.str();
}

std::string format_report_csv(const BenchReport& report, bool with_timing) {
  std::ostringstream out;
  out << "image,method,k,gross_bpp,net_bpp,sidecar_bpp,psnr_db,ok";
  if (with_timing) out << ",embed_ms,extract_ms";
  out << '\n';
  for (const auto& row : report.rows) {
    out << row.image << ',' << to_string(row.method) << ',' << row.k << ',' << fixed(row.gross_bpp) << ','
        << fixed(row.net_bpp) << ',' << fixed(row.sidecar_bpp) << ',' << format_db(row.psnr_db) << ','
        << (row.ok ? "true" : "false");
    if (with_timing) out << ',' << fixed(row.embed_ms, 2) << ',' << fixed(row.extract_ms, 2);
    out << '\n';
  }
  return out.str();
}

std::string format_report_markdown(const BenchReport& report) {
  std::ostringstream out;
  out << "| image | method | k | gross bpp | net bpp | sidecar bpp | PSNR (dB) | ok | reference claim |\n";
  out << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& row : report.rows) {
    out << "| " << row.image << " | " << to_string(row.method) << " | " << row.k << " | "
        << fixed(row.gross_bpp, 4) << " | " << fixed(row.net_bpp, 4) << " | " << fixed(row.sidecar_bpp, 4)
        << " | " << format_db(row.psnr_db) << " | " << (row.ok ? "yes" : "no") << " | " << claim_verdict(row)
        << " |\n";
  }
  if (!report.failures.empty()) {
    out << "\nFailed combinations:\n\n";
    for (const auto& f : report.failures) {
      out << "- " << f.image << " / " << to_string(f.method) << " / k=" << f.k << ": " << f.error << '\n';
    }
  }
  return out.str();
}

}  // namespace rdh
