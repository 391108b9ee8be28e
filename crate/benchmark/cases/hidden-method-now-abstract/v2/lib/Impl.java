package lib;

class Impl extends C { void h() {} }
