from django.apps import AppConfig


class OrdStarConfig(AppConfig):
    name = "ordstar"
    verbose_name = "Ordered pointed sets and simplicial objects"
