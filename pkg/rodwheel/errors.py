class RodwheelError(Exception):
    pass


class DomainError(RodwheelError, ArithmeticError):
    pass


class SingularMassError(RodwheelError):
    def __init__(self, *args, theta=None, pivot=None, **kwargs):
        super().__init__(*args, **kwargs)
        self.theta = theta
        self.pivot = pivot


class ScenarioError(RodwheelError):
    def __init__(self, *args, locations=None, **kwargs):
        super().__init__(*args, **kwargs)
        self.locations = locations


class ScenarioNotFoundError(ScenarioError):
    pass


class ScenarioValidationError(ScenarioError):
    pass


class InvalidControllerError(RodwheelError):
    pass


class InvalidSweepParameterError(RodwheelError):
    pass


class CommandError(RodwheelError):
    pass
