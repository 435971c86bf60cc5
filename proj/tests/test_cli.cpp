#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "rdh/image.hpp"
#include "rdh/synth.hpp"

using namespace rdh;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, const fs::path& dir) {
  const fs::path log = dir / "out.txt";
  const std::string cmd = std::string(RDH_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
  const int raw = std::system(cmd.c_str());
  std::ifstream in(log);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, ss.str()};
}

fs::path scratch() {
  fs::path dir = fs::temp_directory_path() / ("rdh_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("embed and extract through the command line") {
  const fs::path dir = scratch();
  write_pgm_file(dir / "cover.pgm", uniform_random_image(128, 128, 1));
  std::vector<std::uint8_t> payload(900);
  for (std::size_t i = 0; i < payload.size(); ++i) payload[i] = std::uint8_t(i * 37 + 11);
  write_binary_file(dir / "payload.bin", payload);

  const std::string d = dir.string() + "/";
  auto e = run("embed --cover " + d + "cover.pgm --payload " + d + "payload.bin --layers 2 --mode sidecar --out " +
                   d + "stego.pgm --sidecar " + d + "maps.bin --trace " + d + "trace.txt",
               dir);
  REQUIRE(e.status == 0);
  auto x = run("extract --stego " + d + "stego.pgm --layers 2 --mode sidecar --sidecar " + d + "maps.bin --out " +
                   d + "got.bin --recovered " + d + "back.pgm",
               dir);
  REQUIRE(x.status == 0);
  CHECK(read_binary_file(dir / "got.bin") == payload);
  CHECK(read_pgm_file(dir / "back.pgm") == read_pgm_file(dir / "cover.pgm"));

  auto same = run("psnr " + d + "cover.pgm " + d + "back.pgm", dir);
  CHECK(same.status == 0);
  CHECK(same.out == "inf\n");

  auto wrong_k = run("extract --stego " + d + "stego.pgm --layers 1 --mode sidecar --sidecar " + d +
                         "maps.bin --out " + d + "bad.bin",
                     dir);
  CHECK(wrong_k.status == 1);
  CHECK(wrong_k.out.find("LayerCountMismatch") != std::string::npos);

  auto inband = run("capacity --cover " + d + "cover.pgm --mode inband", dir);
  CHECK(inband.status == 1);
  CHECK(inband.out.find("InsufficientCapacity") != std::string::npos);

  auto cap = run("capacity --cover " + d + "cover.pgm --layers 2", dir);
  CHECK(cap.status == 0);
  fs::remove_all(dir);
}

TEST_CASE("usage errors exit with status 2") {
  const fs::path dir = scratch();
  CHECK(run("", dir).status == 2);
  CHECK(run("embed --cover x.pgm", dir).status == 2);
  CHECK(run("capacity --cover x.pgm --mode lossy", dir).status == 2);
  CHECK(run("embed --cover a --payload b --out c", dir).status == 2);  // sidecar mode without --sidecar
  CHECK(run("bench --synthetic uniform --size 64 --count 1", dir).status == 2);
  auto missing = run("psnr " + dir.string() + "/nope.pgm " + dir.string() + "/nope.pgm", dir);
  CHECK(missing.status == 1);
  CHECK(missing.out.find("IoError") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("bench writes text, csv and markdown reports") {
  const fs::path dir = scratch();
  auto b = run("bench --synthetic uniform --size 64x64 --count 2 --methods proposed de --layers 1 2 --no-timing "
               "--report " + (dir / "report.txt").string(),
               dir);
  CHECK(b.status == 0);
  CHECK(b.out.find("method=de") != std::string::npos);
  CHECK(fs::exists(dir / "report.txt"));
  CHECK(fs::exists(dir / "report.txt.csv"));
  CHECK(fs::exists(dir / "report.txt.md"));
  fs::remove_all(dir);
}
