fn main() {
    std::process::exit(lambda_ecs::cli::run(std::env::args()));
}
