use lazy_streams::alloc::CountingAlloc;

#[global_allocator]
static ALLOC: CountingAlloc = CountingAlloc;

fn main() {
    std::process::exit(lazy_streams::cli::run(std::env::args_os().skip(1)));
}
