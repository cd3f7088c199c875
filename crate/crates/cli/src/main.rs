fn main() {
    std::process::exit(zchelp::run(std::env::args_os()));
}
