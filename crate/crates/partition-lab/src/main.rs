use std::process::ExitCode;

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes (`table ... | head`)
    // instead of panicking on the failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    partition_lab::cli::run()
}
