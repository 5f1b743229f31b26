use rayon::ThreadPoolBuilder;

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "TRIFREE_THREADS";

/// `TRIFREE_THREADS` if set to a positive integer, else the available
/// parallelism.
pub fn thread_count() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Runs `f` on a dedicated pool of `threads` workers (default
/// [`thread_count`]). Results never depend on the count.
pub fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    let pool = ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or_else(thread_count))
        .build()
        .expect("thread pool");
    pool.install(f)
}
