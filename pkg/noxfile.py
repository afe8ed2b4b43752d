import nox


@nox.session()
@nox.parametrize("numpy", ["1.21", "1.24", "1.26"])
def tests(session, numpy):
    session.install("poetry")
    session.run("poetry", "install")
    session.install(f"numpy=={numpy}.*")
    session.run("pytest", "-m", "not slow")
    session.run("pytest", "-m", "slow")
